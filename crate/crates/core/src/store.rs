//! In-memory statement store for one ontology.
//!
//! Every term is interned to a dense [`TermId`], every relation to a dense
//! [`RelId`] that is created together with its inverse. Adding `r(x, y)`
//! always stores `r⁻¹(y, x)` as well, so literals can appear as subjects of
//! inverse statements. Three indexes (by subject, by relation, by
//! relation-object) are kept in step with the statement set.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use log::warn;
use thiserror::Error;

/// Suffix appended to a relation name to name its inverse.
pub const INVERSE_SUFFIX: &str = "⁻¹";

/// Lexical name used for the typing relation inside the store.
pub const TYPE_RELATION: &str = "rdf:type";

/// Which of the two aligned ontologies a term comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    First,
    Second,
}

impl Origin {
    pub fn other(self) -> Origin {
        match self {
            Origin::First => Origin::Second,
            Origin::Second => Origin::First,
        }
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::First => f.write_str("first"),
            Origin::Second => f.write_str("second"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermKind {
    Instance,
    Literal,
    Relation,
    Class,
}

impl fmt::Display for TermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TermKind::Instance => "instance",
            TermKind::Literal => "literal",
            TermKind::Relation => "relation",
            TermKind::Class => "class",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(pub(crate) u32);

impl TermId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelId(pub(crate) u32);

impl RelId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Borrowed view of an interned term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term<'a> {
    pub id: TermId,
    pub kind: TermKind,
    pub lexical: &'a str,
    pub origin: Origin,
}

/// Borrowed view of an interned relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation<'a> {
    pub id: RelId,
    pub lexical: &'a str,
    pub inverse: RelId,
    /// `false` for the automatically created `r⁻¹`.
    pub forward: bool,
    pub origin: Origin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statement {
    pub subject: TermId,
    pub relation: RelId,
    pub object: TermId,
}

/// Access pattern accepted by [`Ontology::query`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    Subject(TermId),
    RelationObject(RelId, TermId),
    Relation(RelId),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StoreError {
    #[error("malformed statement {statement}: {reason}")]
    MalformedStatement {
        statement: String,
        reason: &'static str,
    },
}

#[derive(Debug, Clone)]
struct TermEntry {
    kind: TermKind,
    lexical: Box<str>,
}

#[derive(Debug, Clone)]
struct RelationEntry {
    lexical: Box<str>,
    inverse: RelId,
    forward: bool,
}

/// Indexed statement set of one ontology.
#[derive(Debug, Clone)]
pub struct Ontology {
    origin: Origin,
    terms: Vec<TermEntry>,
    term_index: HashMap<(TermKind, Box<str>), TermId>,
    relations: Vec<RelationEntry>,
    relation_index: HashMap<Box<str>, RelId>,
    type_relation: Option<RelId>,
    statements: HashSet<Statement>,
    by_subject: Vec<Vec<(RelId, TermId)>>,
    by_relation: Vec<Vec<(TermId, TermId)>>,
    by_relation_object: HashMap<(RelId, TermId), Vec<TermId>>,
    class_members: HashMap<TermId, Vec<TermId>>,
    instance_classes: HashMap<TermId, Vec<TermId>>,
    subclass_of: BTreeSet<(TermId, TermId)>,
    subproperty_of: BTreeSet<(RelId, RelId)>,
}

impl Ontology {
    pub fn new(origin: Origin) -> Self {
        Ontology {
            origin,
            terms: Vec::new(),
            term_index: HashMap::new(),
            relations: Vec::new(),
            relation_index: HashMap::new(),
            type_relation: None,
            statements: HashSet::new(),
            by_subject: Vec::new(),
            by_relation: Vec::new(),
            by_relation_object: HashMap::new(),
            class_members: HashMap::new(),
            instance_classes: HashMap::new(),
            subclass_of: BTreeSet::new(),
            subproperty_of: BTreeSet::new(),
        }
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    // ---- interning ----

    /// Interns `(kind, lexical)`, returning the existing id when present.
    pub fn intern(&mut self, kind: TermKind, lexical: &str) -> TermId {
        if let Some(&id) = self.term_index.get(&(kind, Box::from(lexical))) {
            return id;
        }
        let id = TermId(self.terms.len() as u32);
        self.terms.push(TermEntry {
            kind,
            lexical: lexical.into(),
        });
        self.term_index.insert((kind, lexical.into()), id);
        self.by_subject.push(Vec::new());
        id
    }

    pub fn instance(&mut self, lexical: &str) -> TermId {
        self.intern(TermKind::Instance, lexical)
    }

    pub fn literal(&mut self, lexical: &str) -> TermId {
        self.intern(TermKind::Literal, lexical)
    }

    pub fn class(&mut self, lexical: &str) -> TermId {
        self.intern(TermKind::Class, lexical)
    }

    /// Interns a relation together with its inverse and returns the forward id.
    pub fn relation(&mut self, lexical: &str) -> RelId {
        if let Some(&id) = self.relation_index.get(lexical) {
            return id;
        }
        let forward = RelId(self.relations.len() as u32);
        let backward = RelId(forward.0 + 1);
        self.relations.push(RelationEntry {
            lexical: lexical.into(),
            inverse: backward,
            forward: true,
        });
        self.relations.push(RelationEntry {
            lexical: format!("{lexical}{INVERSE_SUFFIX}").into(),
            inverse: forward,
            forward: false,
        });
        self.by_relation.push(Vec::new());
        self.by_relation.push(Vec::new());
        self.relation_index.insert(lexical.into(), forward);
        forward
    }

    /// The typing relation; created on first use.
    pub fn type_relation(&mut self) -> RelId {
        match self.type_relation {
            Some(r) => r,
            None => {
                let r = self.relation(TYPE_RELATION);
                self.type_relation = Some(r);
                r
            }
        }
    }

    /// `true` for the typing relation and its inverse.
    pub fn is_schema_relation(&self, r: RelId) -> bool {
        match self.type_relation {
            Some(t) => r == t || r == self.inverse(t),
            None => false,
        }
    }

    // ---- lookups ----

    pub fn term(&self, id: TermId) -> Term<'_> {
        let e = &self.terms[id.index()];
        Term {
            id,
            kind: e.kind,
            lexical: &e.lexical,
            origin: self.origin,
        }
    }

    pub fn kind(&self, id: TermId) -> TermKind {
        self.terms[id.index()].kind
    }

    pub fn lexical(&self, id: TermId) -> &str {
        &self.terms[id.index()].lexical
    }

    pub fn find_term(&self, kind: TermKind, lexical: &str) -> Option<TermId> {
        self.term_index.get(&(kind, Box::from(lexical))).copied()
    }

    pub fn find_relation(&self, lexical: &str) -> Option<RelId> {
        if let Some(&r) = self.relation_index.get(lexical) {
            return Some(r);
        }
        lexical
            .strip_suffix(INVERSE_SUFFIX)
            .and_then(|base| self.relation_index.get(base))
            .map(|&r| self.inverse(r))
    }

    pub fn relation_info(&self, r: RelId) -> Relation<'_> {
        let e = &self.relations[r.index()];
        Relation {
            id: r,
            lexical: &e.lexical,
            inverse: e.inverse,
            forward: e.forward,
            origin: self.origin,
        }
    }

    pub fn relation_name(&self, r: RelId) -> &str {
        &self.relations[r.index()].lexical
    }

    pub fn inverse(&self, r: RelId) -> RelId {
        self.relations[r.index()].inverse
    }

    pub fn is_forward(&self, r: RelId) -> bool {
        self.relations[r.index()].forward
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    /// Number of stored statements, inverse statements included.
    pub fn statement_count(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = Term<'_>> + '_ {
        (0..self.terms.len()).map(move |i| self.term(TermId(i as u32)))
    }

    pub fn terms_of_kind(&self, kind: TermKind) -> impl Iterator<Item = TermId> + '_ {
        self.terms
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.kind == kind)
            .map(|(i, _)| TermId(i as u32))
    }

    pub fn instances(&self) -> impl Iterator<Item = TermId> + '_ {
        self.terms_of_kind(TermKind::Instance)
    }

    pub fn classes(&self) -> impl Iterator<Item = TermId> + '_ {
        self.terms_of_kind(TermKind::Class)
    }

    /// All relation ids, inverses included.
    pub fn relations(&self) -> impl Iterator<Item = RelId> {
        (0..self.relations.len() as u32).map(RelId)
    }

    pub fn contains(&self, subject: TermId, relation: RelId, object: TermId) -> bool {
        self.statements.contains(&Statement {
            subject,
            relation,
            object,
        })
    }

    /// `(relation, object)` for every statement whose subject is `subject`.
    pub fn statements_of(&self, subject: TermId) -> &[(RelId, TermId)] {
        self.by_subject
            .get(subject.index())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// `(subject, object)` for every statement of `relation`, in insertion order.
    pub fn pairs(&self, relation: RelId) -> &[(TermId, TermId)] {
        self.by_relation
            .get(relation.index())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn subjects(&self, relation: RelId, object: TermId) -> &[TermId] {
        self.by_relation_object
            .get(&(relation, object))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn members(&self, class: TermId) -> &[TermId] {
        self.class_members
            .get(&class)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn classes_of(&self, instance: TermId) -> &[TermId] {
        self.instance_classes
            .get(&instance)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn subclass_edges(&self) -> &BTreeSet<(TermId, TermId)> {
        &self.subclass_of
    }

    pub fn subproperty_edges(&self) -> &BTreeSet<(RelId, RelId)> {
        &self.subproperty_of
    }

    /// Forward, non-typing statements with `subject` as subject.
    pub fn fact_count(&self, subject: TermId) -> usize {
        self.statements_of(subject)
            .iter()
            .filter(|(r, _)| self.is_forward(*r) && !self.is_schema_relation(*r))
            .count()
    }

    /// Streams the statements matching `pattern`; unknown terms give an empty stream.
    pub fn query(&self, pattern: Pattern) -> Box<dyn Iterator<Item = Statement> + '_> {
        match pattern {
            Pattern::Subject(s) => Box::new(self.statements_of(s).iter().map(move |&(r, o)| {
                Statement {
                    subject: s,
                    relation: r,
                    object: o,
                }
            })),
            Pattern::RelationObject(r, o) => {
                Box::new(self.subjects(r, o).iter().map(move |&s| Statement {
                    subject: s,
                    relation: r,
                    object: o,
                }))
            }
            Pattern::Relation(r) => Box::new(self.pairs(r).iter().map(move |&(s, o)| Statement {
                subject: s,
                relation: r,
                object: o,
            })),
        }
    }

    /// Iterates the full statement set, inverse statements included.
    pub fn statements(&self) -> impl Iterator<Item = Statement> + '_ {
        self.statements.iter().copied()
    }

    pub fn display_statement(&self, s: Statement) -> String {
        format!(
            "{}({}, {})",
            self.relation_name(s.relation),
            self.lexical(s.subject),
            self.lexical(s.object)
        )
    }

    // ---- mutation ----

    /// Adds `relation(subject, object)` and its inverse.
    ///
    /// Returns `Ok(false)` when the statement was already present. Statements
    /// through an inverse relation are stored as their forward counterpart.
    pub fn add_statement(
        &mut self,
        subject: TermId,
        relation: RelId,
        object: TermId,
    ) -> Result<bool, StoreError> {
        let (subject, relation, object) = if self.is_forward(relation) {
            (subject, relation, object)
        } else {
            (object, self.inverse(relation), subject)
        };
        self.validate(subject, relation, object)?;
        let st = Statement {
            subject,
            relation,
            object,
        };
        if !self.statements.insert(st) {
            return Ok(false);
        }
        let inv = self.inverse(relation);
        self.statements.insert(Statement {
            subject: object,
            relation: inv,
            object: subject,
        });
        self.index(subject, relation, object);
        self.index(object, inv, subject);
        if Some(relation) == self.type_relation {
            self.class_members.entry(object).or_default().push(subject);
            self.instance_classes.entry(subject).or_default().push(object);
        }
        Ok(true)
    }

    /// Adds `rdf:type(instance, class)`.
    pub fn add_type(&mut self, instance: TermId, class: TermId) -> Result<bool, StoreError> {
        let t = self.type_relation();
        self.add_statement(instance, t, class)
    }

    pub fn add_subclass(&mut self, sub: TermId, sup: TermId) -> Result<bool, StoreError> {
        for (id, role) in [(sub, "subclass"), (sup, "superclass")] {
            if self.kind(id) != TermKind::Class {
                return Err(StoreError::MalformedStatement {
                    statement: format!(
                        "subClassOf({}, {})",
                        self.lexical(sub),
                        self.lexical(sup)
                    ),
                    reason: if role == "subclass" {
                        "subclass is not a class"
                    } else {
                        "superclass is not a class"
                    },
                });
            }
        }
        Ok(self.subclass_of.insert((sub, sup)))
    }

    pub fn add_subproperty(&mut self, sub: RelId, sup: RelId) -> bool {
        // r ⊆ s entails r⁻¹ ⊆ s⁻¹; both edges are kept.
        let inv = (self.inverse(sub), self.inverse(sup));
        let fresh = self.subproperty_of.insert((sub, sup));
        self.subproperty_of.insert(inv);
        fresh
    }

    fn validate(&self, subject: TermId, relation: RelId, object: TermId) -> Result<(), StoreError> {
        let fail = |reason| {
            Err(StoreError::MalformedStatement {
                statement: format!(
                    "{}({}, {})",
                    self.relation_name(relation),
                    self.lexical(subject),
                    self.lexical(object)
                ),
                reason,
            })
        };
        match self.kind(subject) {
            TermKind::Literal => return fail("literal used as subject"),
            TermKind::Relation => return fail("relation used as subject of a non-schema statement"),
            _ => {}
        }
        if self.kind(object) == TermKind::Relation {
            return fail("relation used as object of a non-schema statement");
        }
        if Some(relation) == self.type_relation && self.kind(object) != TermKind::Class {
            return fail("type object is not a class");
        }
        Ok(())
    }

    fn index(&mut self, subject: TermId, relation: RelId, object: TermId) {
        self.by_subject[subject.index()].push((relation, object));
        self.by_relation[relation.index()].push((subject, object));
        self.by_relation_object
            .entry((relation, object))
            .or_default()
            .push(subject);
    }

    /// Materialises everything implied by the subclass and subproperty edges.
    ///
    /// Schema edges become transitively closed. Members of a cycle end up
    /// sharing all their types and pairs, i.e. the cycle behaves as one group.
    pub fn close_under_schema(&mut self) {
        if self.subclass_of.is_empty() && self.subproperty_of.is_empty() {
            return;
        }
        let class_up = reachability(&self.subclass_of);
        let rel_up = reachability(&self.subproperty_of);
        warn_cycles(&class_up, |c| self.lexical(c).to_string(), "subClassOf");
        warn_cycles(&rel_up, |r| self.relation_name(r).to_string(), "subPropertyOf");

        let mut pending: Vec<(TermId, RelId, TermId)> = Vec::new();
        for (&r, sups) in &rel_up {
            if !self.is_forward(r) {
                continue;
            }
            for &(s, o) in self.pairs(r) {
                for &sup in sups {
                    if sup != r && self.is_forward(sup) {
                        pending.push((s, sup, o));
                    }
                }
            }
        }
        for (s, r, o) in pending {
            if let Err(e) = self.add_statement(s, r, o) {
                warn!("closure skipped {e}");
            }
        }

        let mut pending: Vec<(TermId, TermId)> = Vec::new();
        for (&c, sups) in &class_up {
            for &x in self.members(c) {
                for &d in sups {
                    if d != c {
                        pending.push((x, d));
                    }
                }
            }
        }
        for (x, d) in pending {
            if let Err(e) = self.add_type(x, d) {
                warn!("closure skipped {e}");
            }
        }

        self.subclass_of = closed_edges(&class_up);
        self.subproperty_of = closed_edges(&rel_up);
    }
}

/// For every node with outgoing edges, all nodes reachable in one or more steps.
fn reachability<T: Copy + Ord>(edges: &BTreeSet<(T, T)>) -> std::collections::BTreeMap<T, BTreeSet<T>> {
    let mut adj: std::collections::BTreeMap<T, Vec<T>> = std::collections::BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
    }
    let mut out = std::collections::BTreeMap::new();
    for &start in adj.keys() {
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<T> = adj[&start].iter().copied().collect();
        while let Some(n) = queue.pop_front() {
            if seen.insert(n) {
                if let Some(next) = adj.get(&n) {
                    queue.extend(next.iter().copied());
                }
            }
        }
        out.insert(start, seen);
    }
    out
}

fn closed_edges<T: Copy + Ord>(up: &std::collections::BTreeMap<T, BTreeSet<T>>) -> BTreeSet<(T, T)> {
    up.iter()
        .flat_map(|(&a, sups)| sups.iter().map(move |&b| (a, b)))
        .collect()
}

fn warn_cycles<T: Copy + Ord>(
    up: &std::collections::BTreeMap<T, BTreeSet<T>>,
    name: impl Fn(T) -> String,
    what: &str,
) {
    let cyclic: Vec<String> = up
        .iter()
        .filter(|(a, sups)| sups.contains(a))
        .map(|(&a, _)| name(a))
        .collect();
    if !cyclic.is_empty() {
        warn!(
            "{what} cycle collapsed into one group: {}",
            cyclic.join(", ")
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elvis() -> (Ontology, TermId) {
        let mut o = Ontology::new(Origin::First);
        let elvis = o.instance("Elvis");
        let tupelo = o.instance("Tupelo");
        let born = o.relation("wasBornIn");
        let singer = o.class("singer");
        let person = o.class("person");
        o.add_statement(elvis, born, tupelo).unwrap();
        o.add_type(elvis, singer).unwrap();
        o.add_subclass(singer, person).unwrap();
        o.close_under_schema();
        (o, elvis)
    }

    #[test]
    fn add_stores_inverse() {
        let mut o = Ontology::new(Origin::First);
        let elvis = o.instance("Elvis");
        let tupelo = o.instance("Tupelo");
        let born = o.relation("wasBornIn");
        assert!(o.add_statement(elvis, born, tupelo).unwrap());
        let inv = o.inverse(born);
        assert!(o.contains(elvis, born, tupelo));
        assert!(o.contains(tupelo, inv, elvis));
        assert_eq!(o.relation_name(inv), "wasBornIn⁻¹");
        assert_eq!(o.statement_count(), 2);
        assert!(!o.add_statement(elvis, born, tupelo).unwrap());
        assert_eq!(o.statement_count(), 2);
        // the same fact entered through the inverse relation is a duplicate
        assert!(!o.add_statement(tupelo, inv, elvis).unwrap());
        assert_eq!(o.statement_count(), 2);
    }

    #[test]
    fn type_index_both_ways() {
        let mut o = Ontology::new(Origin::First);
        let elvis = o.instance("Elvis");
        let singer = o.class("singer");
        o.add_type(elvis, singer).unwrap();
        assert_eq!(o.members(singer), &[elvis]);
        assert_eq!(o.classes_of(elvis), &[singer]);
    }

    #[test]
    fn rejects_malformed_kinds() {
        let mut o = Ontology::new(Origin::First);
        let r = o.relation("r");
        let rel_term = o.intern(TermKind::Relation, "knows");
        let lit = o.literal("\"x\"");
        let a = o.instance("a");
        let err = o.add_statement(rel_term, r, a).unwrap_err();
        assert!(err.to_string().contains("r(knows, a)"), "{err}");
        assert!(o.add_statement(lit, r, a).is_err());
        assert!(o.add_statement(a, r, rel_term).is_err());
        assert!(o.add_type(a, a).is_err());
        assert_eq!(o.statement_count(), 0);
        // a literal subject is fine through an inverse relation
        let inv = o.inverse(r);
        assert!(o.add_statement(lit, inv, a).unwrap());
        assert!(o.contains(a, r, lit));
    }

    #[test]
    fn closure_materializes_types_and_pairs() {
        let (o, elvis) = elvis();
        let person = o.find_term(TermKind::Class, "person").unwrap();
        assert!(o.classes_of(elvis).contains(&person));

        let mut o = Ontology::new(Origin::First);
        let paris = o.instance("Paris");
        let france = o.instance("France");
        let cap = o.relation("capitalOf");
        let loc = o.relation("locatedIn");
        o.add_statement(paris, cap, france).unwrap();
        o.add_subproperty(cap, loc);
        o.close_under_schema();
        assert!(o.contains(paris, loc, france));
        assert!(o.contains(france, o.inverse(loc), paris));
    }

    #[test]
    fn closure_is_idempotent_and_transitive() {
        let mut o = Ontology::new(Origin::First);
        let x = o.instance("x");
        let a = o.class("a");
        let b = o.class("b");
        let c = o.class("c");
        o.add_type(x, a).unwrap();
        o.add_subclass(a, b).unwrap();
        o.add_subclass(b, c).unwrap();
        o.close_under_schema();
        assert!(o.subclass_edges().contains(&(a, c)));
        assert!(o.classes_of(x).contains(&c));
        let n = o.statement_count();
        let edges = o.subclass_edges().clone();
        o.close_under_schema();
        assert_eq!(o.statement_count(), n);
        assert_eq!(o.subclass_edges(), &edges);
    }

    #[test]
    fn empty_schema_leaves_store_unchanged() {
        let mut o = Ontology::new(Origin::First);
        let a = o.instance("a");
        let b = o.instance("b");
        let r = o.relation("r");
        o.add_statement(a, r, b).unwrap();
        let before: BTreeSet<_> = o.statements().collect();
        o.close_under_schema();
        let after: BTreeSet<_> = o.statements().collect();
        assert_eq!(before, after);
    }

    #[test]
    fn subclass_cycle_collapses() {
        let mut o = Ontology::new(Origin::First);
        let x = o.instance("x");
        let y = o.instance("y");
        let a = o.class("a");
        let b = o.class("b");
        o.add_type(x, a).unwrap();
        o.add_type(y, b).unwrap();
        o.add_subclass(a, b).unwrap();
        o.add_subclass(b, a).unwrap();
        o.close_under_schema();
        let mut ma = o.members(a).to_vec();
        let mut mb = o.members(b).to_vec();
        ma.sort();
        mb.sort();
        assert_eq!(ma, vec![x, y]);
        assert_eq!(ma, mb);
    }

    #[test]
    fn query_patterns() {
        let (o, elvis) = elvis();
        let got: BTreeSet<String> = o
            .query(Pattern::Subject(elvis))
            .map(|s| o.display_statement(s))
            .collect();
        let want: BTreeSet<String> = [
            "rdf:type(Elvis, singer)",
            "rdf:type(Elvis, person)",
            "wasBornIn(Elvis, Tupelo)",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        assert_eq!(got, want);

        let born = o.find_relation("wasBornIn").unwrap();
        let tupelo = o.find_term(TermKind::Instance, "Tupelo").unwrap();
        let subjects: Vec<_> = o
            .query(Pattern::RelationObject(born, tupelo))
            .map(|s| s.subject)
            .collect();
        assert_eq!(subjects, vec![elvis]);

        let unknown = TermId(9999);
        assert_eq!(o.query(Pattern::Subject(unknown)).count(), 0);
        assert_eq!(o.query(Pattern::Relation(RelId(9999))).count(), 0);
    }

    #[test]
    fn inverse_lookup_by_name() {
        let mut o = Ontology::new(Origin::Second);
        let r = o.relation("starring");
        assert_eq!(o.find_relation("starring⁻¹"), Some(o.inverse(r)));
        assert_eq!(o.inverse(o.inverse(r)), r);
        assert_ne!(o.inverse(r), r);
    }
}
