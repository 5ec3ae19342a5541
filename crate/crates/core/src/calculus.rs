//! Probability identities for independent events.
//!
//! The alignment formulas are derived from logical rules by assuming all
//! events independent; these helpers are the building blocks.

/// `P(A ∧ B)`.
pub fn and(a: f64, b: f64) -> f64 {
    a * b
}

/// `P(A ∨ B)`.
pub fn or(a: f64, b: f64) -> f64 {
    1.0 - (1.0 - a) * (1.0 - b)
}

/// `P(∀i: A_i)`.
pub fn forall(ps: impl IntoIterator<Item = f64>) -> f64 {
    ps.into_iter().product()
}

/// `P(∃i: A_i)`; 0 for no events.
pub fn exists(ps: impl IntoIterator<Item = f64>) -> f64 {
    1.0 - ps.into_iter().map(|p| 1.0 - p).product::<f64>()
}

/// `E(#i: A_i)`.
pub fn expected_count(ps: impl IntoIterator<Item = f64>) -> f64 {
    ps.into_iter().sum()
}

/// Running `∏(1 − p)` whose complement is `P(∃)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoneOf(f64);

impl Default for NoneOf {
    fn default() -> Self {
        NoneOf(1.0)
    }
}

impl NoneOf {
    pub fn add(&mut self, p: f64) {
        self.0 *= 1.0 - p;
    }

    pub fn miss(&self) -> f64 {
        self.0
    }

    pub fn any(&self) -> f64 {
        1.0 - self.0
    }
}
