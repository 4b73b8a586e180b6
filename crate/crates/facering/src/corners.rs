//! Combinatorial model of a nice manifold with corners: the face poset with
//! facet labels, one cohomology algebra per face, and restriction
//! homomorphisms stored on covering pairs and composed on demand.
//!
//! Validation checks seven poset axioms (unique maximum, niceness,
//! monotonicity, facet indexing, unique component, restriction functoriality,
//! partition) together with the algebra laws and homomorphism laws of the
//! supplied cohomological data.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraMap, GradedAlgebra};
use crate::scalar::FieldSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face record {position} has id {id}, expected ids to match positions")]
    MisnumberedFace { position: usize, id: usize },
    #[error("face {face} refers to facet index {index} outside 1..={m}")]
    LabelOutOfRange { face: usize, index: usize, m: usize },
    #[error("cover pair ({sub}, {sup}) refers to an unknown face")]
    UnknownCoverFace { sub: usize, sup: usize },
    #[error("covering relation contains a cycle")]
    CyclicCovers,
    #[error("expected one algebra per face: {got} algebras for {faces} faces")]
    AlgebraCount { got: usize, faces: usize },
    #[error("algebra for face {face} is over the wrong field")]
    AlgebraField { face: usize },
    #[error("missing restriction map for covering pair ({sub}, {sup})")]
    MissingRestriction { sub: usize, sup: usize },
    #[error("restriction map supplied for ({sub}, {sup}) which is not a covering pair")]
    UnknownRestriction { sub: usize, sup: usize },
    #[error("subset {subset:?} is not contained in the label of face {face}")]
    LabelNotSubset { face: usize, subset: Vec<usize> },
    #[error("no face above face {face} carries label {label:?}")]
    NoFaceForLabel { face: usize, label: Vec<usize> },
    #[error("face {lower} is not a subface of face {upper}")]
    NotComparable { lower: usize, upper: usize },
}

/// Identifier of a face within one [`FaceComplex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(usize);

impl FaceId {
    pub fn new(index: usize) -> Self {
        FaceId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One face: its codimension and the set of facets containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub codim: usize,
    pub label: BTreeSet<usize>,
}

/// The seven poset axioms plus the checks on supplied algebra data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexAxiom {
    UniqueMaximum,
    Niceness,
    Monotonicity,
    FacetIndexing,
    UniqueComponent,
    Functoriality,
    Partition,
    AlgebraLaws,
    RestrictionHomomorphism,
}

impl fmt::Display for ComplexAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ComplexAxiom::UniqueMaximum => "unique-maximum",
            ComplexAxiom::Niceness => "niceness",
            ComplexAxiom::Monotonicity => "monotonicity",
            ComplexAxiom::FacetIndexing => "facet-indexing",
            ComplexAxiom::UniqueComponent => "unique-component",
            ComplexAxiom::Functoriality => "functoriality",
            ComplexAxiom::Partition => "partition",
            ComplexAxiom::AlgebraLaws => "algebra-laws",
            ComplexAxiom::RestrictionHomomorphism => "restriction-homomorphism",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone)]
pub struct ComplexViolation {
    pub axiom: ComplexAxiom,
    pub witness: String,
}

/// Violations found by [`FaceComplex::validate`]; empty means pass.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<ComplexViolation>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: ComplexAxiom, witness: String) {
        self.violations.push(ComplexViolation { axiom, witness });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            writeln!(f, "PASS")
        } else {
            for v in &self.violations {
                writeln!(f, "FAIL {}: {}", v.axiom, v.witness)?;
            }
            Ok(())
        }
    }
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// The face poset of a nice manifold with corners together with its
/// cohomological data. Immutable after construction; every operation is a
/// pure function of its inputs.
#[derive(Debug, Clone)]
pub struct FaceComplex {
    field: FieldSpec,
    m: usize,
    faces: Vec<Face>,
    covers: Vec<(FaceId, FaceId)>,
    algebras: Vec<GradedAlgebra>,
    cover_maps: BTreeMap<(usize, usize), AlgebraMap>,
    /// `leq[a][b]` holds when face `a` is a subface of face `b` (reflexive).
    leq: Vec<Vec<bool>>,
}

impl FaceComplex {
    /// Assembles a complex from raw parts. Structural defects (bad indices,
    /// missing maps, cover cycles) are errors here; the semantic axioms are
    /// the business of [`FaceComplex::validate`].
    pub fn new(
        field: FieldSpec,
        m: usize,
        faces: Vec<Face>,
        covers: Vec<(FaceId, FaceId)>,
        algebras: Vec<GradedAlgebra>,
        cover_maps: BTreeMap<(usize, usize), AlgebraMap>,
    ) -> Result<Self, ComplexError> {
        let n = faces.len();
        for (position, face) in faces.iter().enumerate() {
            if face.id.index() != position {
                return Err(ComplexError::MisnumberedFace {
                    position,
                    id: face.id.index(),
                });
            }
            for &i in &face.label {
                if i == 0 || i > m {
                    return Err(ComplexError::LabelOutOfRange {
                        face: position,
                        index: i,
                        m,
                    });
                }
            }
        }
        if algebras.len() != n {
            return Err(ComplexError::AlgebraCount {
                got: algebras.len(),
                faces: n,
            });
        }
        for (i, alg) in algebras.iter().enumerate() {
            if alg.field() != field {
                return Err(ComplexError::AlgebraField { face: i });
            }
        }
        let mut covers = covers;
        covers.sort_unstable();
        covers.dedup();
        for &(sub, sup) in &covers {
            if sub.index() >= n || sup.index() >= n || sub == sup {
                return Err(ComplexError::UnknownCoverFace {
                    sub: sub.index(),
                    sup: sup.index(),
                });
            }
            if !cover_maps.contains_key(&(sub.index(), sup.index())) {
                return Err(ComplexError::MissingRestriction {
                    sub: sub.index(),
                    sup: sup.index(),
                });
            }
        }
        for &(sub, sup) in cover_maps.keys() {
            if !covers.contains(&(FaceId(sub), FaceId(sup))) {
                return Err(ComplexError::UnknownRestriction { sub, sup });
            }
        }

        // Reflexive-transitive closure of the covering relation, rejecting
        // cycles along the way.
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        let mut changed = true;
        let mut rounds = 0usize;
        while changed {
            changed = false;
            rounds += 1;
            if rounds > n + 1 {
                return Err(ComplexError::CyclicCovers);
            }
            for &(sub, sup) in &covers {
                for e in 0..n {
                    if leq[e][sub.index()] && !leq[e][sup.index()] {
                        leq[e][sup.index()] = true;
                        changed = true;
                    }
                }
            }
        }
        for &(sub, sup) in &covers {
            if leq[sup.index()][sub.index()] {
                return Err(ComplexError::CyclicCovers);
            }
        }

        Ok(FaceComplex {
            field,
            m,
            faces,
            covers,
            algebras,
            cover_maps,
            leq,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of facets.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id.index()]
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).map(FaceId)
    }

    pub fn label(&self, id: FaceId) -> &BTreeSet<usize> {
        &self.faces[id.index()].label
    }

    pub fn codim(&self, id: FaceId) -> usize {
        self.faces[id.index()].codim
    }

    pub fn algebra(&self, id: FaceId) -> &GradedAlgebra {
        &self.algebras[id.index()]
    }

    pub fn covers(&self) -> &[(FaceId, FaceId)] {
        &self.covers
    }

    pub fn cover_map(&self, sub: FaceId, sup: FaceId) -> Option<&AlgebraMap> {
        self.cover_maps.get(&(sub.index(), sup.index()))
    }

    /// Containment: `e <= f` means `e` is a subface of `f`.
    pub fn leq(&self, e: FaceId, f: FaceId) -> bool {
        self.leq[e.index()][f.index()]
    }

    /// The codimension-zero face. Panics when the complex has no unique
    /// maximum; run [`FaceComplex::validate`] first.
    pub fn max_face(&self) -> FaceId {
        let mut candidates = self.faces.iter().filter(|f| f.codim == 0);
        let first = candidates.next().expect("complex has a codimension-0 face");
        assert!(
            candidates.next().is_none(),
            "complex has more than one codimension-0 face"
        );
        first.id
    }

    /// Faces ordered by increasing codimension, ties broken by id. This is
    /// the canonical processing order for decomposition.
    pub fn faces_by_codim(&self) -> Vec<FaceId> {
        let mut ids: Vec<FaceId> = self.face_ids().collect();
        ids.sort_by_key(|id| (self.codim(*id), id.index()));
        ids
    }

    /// The unique face `E >= f` with label `subset`.
    pub fn face_of_label(
        &self,
        f: FaceId,
        subset: &BTreeSet<usize>,
    ) -> Result<FaceId, ComplexError> {
        if !subset.is_subset(self.label(f)) {
            return Err(ComplexError::LabelNotSubset {
                face: f.index(),
                subset: subset.iter().copied().collect(),
            });
        }
        let mut found = None;
        for e in self.face_ids() {
            if self.leq(f, e) && self.label(e) == subset {
                if found.is_some() {
                    return Err(ComplexError::NoFaceForLabel {
                        face: f.index(),
                        label: subset.iter().copied().collect(),
                    });
                }
                found = Some(e);
            }
        }
        found.ok_or_else(|| ComplexError::NoFaceForLabel {
            face: f.index(),
            label: subset.iter().copied().collect(),
        })
    }

    /// Maximal common lower bounds of two faces; empty when they share no
    /// common face.
    pub fn components(&self, e1: FaceId, e2: FaceId) -> Vec<FaceId> {
        let lower: Vec<FaceId> = self
            .face_ids()
            .filter(|f| self.leq(*f, e1) && self.leq(*f, e2))
            .collect();
        lower
            .iter()
            .copied()
            .filter(|g| lower.iter().all(|h| h == g || !self.leq(*g, *h)))
            .collect()
    }

    /// All downward cover paths from `from` to `to`, each as the sequence of
    /// faces visited. Used by the functoriality check.
    fn cover_paths(&self, from: FaceId, to: FaceId) -> Vec<Vec<FaceId>> {
        if from == to {
            return vec![vec![from]];
        }
        let mut out = Vec::new();
        for &(sub, sup) in &self.covers {
            if sup == from && self.leq(to, sub) {
                for mut tail in self.cover_paths(sub, to) {
                    let mut path = vec![from];
                    path.append(&mut tail);
                    out.push(path);
                }
            }
        }
        out
    }

    fn restrict_along(&self, path: &[FaceId], x: &AlgebraElement) -> AlgebraElement {
        let mut value = x.clone();
        for step in path.windows(2) {
            let (sup, sub) = (step[0], step[1]);
            let map = self
                .cover_map(sub, sup)
                .expect("cover map present; checked at construction");
            value = map
                .apply(self.algebra(sup), self.algebra(sub), &value)
                .expect("restriction is total up to the source top degree");
        }
        value
    }

    /// Restriction of a cohomology class from face `from` down to `to`,
    /// composed along covering pairs. Functoriality (validated eagerly)
    /// makes the result independent of the chain chosen.
    pub fn restrict_coeff(
        &self,
        from: FaceId,
        to: FaceId,
        x: &AlgebraElement,
    ) -> Result<AlgebraElement, ComplexError> {
        if !self.leq(to, from) {
            return Err(ComplexError::NotComparable {
                lower: to.index(),
                upper: from.index(),
            });
        }
        if from == to {
            return Ok(x.clone());
        }
        // Any single path works once functoriality holds; take the first in
        // cover order for determinism.
        let mut current = from;
        let mut value = x.clone();
        while current != to {
            let next = self
                .covers
                .iter()
                .find(|(sub, sup)| *sup == current && self.leq(to, *sub))
                .map(|(sub, _)| *sub)
                .expect("a descending cover chain exists when to <= from");
            let map = self.cover_map(next, current).expect("cover map present");
            value = map
                .apply(self.algebra(current), self.algebra(next), &value)
                .expect("restriction is total up to the source top degree");
            current = next;
        }
        Ok(value)
    }

    /// Checks the seven poset axioms and all supplied algebra data,
    /// returning every violation with a witness.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();

        // Unique maximum: exactly one codimension-0 face, labelled by the
        // empty set, above every face.
        let maxima: Vec<FaceId> = self
            .faces
            .iter()
            .filter(|f| f.codim == 0)
            .map(|f| f.id)
            .collect();
        if maxima.len() != 1 {
            report.push(
                ComplexAxiom::UniqueMaximum,
                format!(
                    "expected exactly one codimension-0 face, found {}: {:?}",
                    maxima.len(),
                    maxima.iter().map(|f| f.index()).collect::<Vec<_>>()
                ),
            );
        } else {
            let q = maxima[0];
            if !self.label(q).is_empty() {
                report.push(
                    ComplexAxiom::UniqueMaximum,
                    format!(
                        "codimension-0 face {q} has nonempty label {}",
                        fmt_set(self.label(q))
                    ),
                );
            }
            for f in self.face_ids() {
                if !self.leq(f, q) {
                    report.push(
                        ComplexAxiom::UniqueMaximum,
                        format!("face {f} is not below the codimension-0 face {q}"),
                    );
                }
            }
        }

        // Niceness: |label| = codim for every face.
        for face in &self.faces {
            if face.label.len() != face.codim {
                report.push(
                    ComplexAxiom::Niceness,
                    format!(
                        "face {} has codim {} but label {}",
                        face.id,
                        face.codim,
                        fmt_set(&face.label)
                    ),
                );
            }
        }

        // Monotonicity: E <= F implies label(F) subseteq label(E); enough to
        // check covering pairs.
        for &(sub, sup) in &self.covers {
            if !self.label(sup).is_subset(self.label(sub)) {
                report.push(
                    ComplexAxiom::Monotonicity,
                    format!(
                        "cover {sub} < {sup}: label {} of {sup} not contained in label {} of {sub}",
                        fmt_set(self.label(sup)),
                        fmt_set(self.label(sub))
                    ),
                );
            }
        }

        // Facet indexing: each i in 1..=m labels exactly one facet.
        for i in 1..=self.m {
            let hits: Vec<FaceId> = self
                .faces
                .iter()
                .filter(|f| f.label.len() == 1 && f.label.contains(&i))
                .map(|f| f.id)
                .collect();
            if hits.len() != 1 {
                report.push(
                    ComplexAxiom::FacetIndexing,
                    format!(
                        "facet index {i} labels {} faces instead of exactly one",
                        hits.len()
                    ),
                );
            }
        }

        // Unique component: for each face F and each subset S of its label,
        // exactly one face above F carries label S.
        for f in self.face_ids() {
            let label: Vec<usize> = self.label(f).iter().copied().collect();
            for mask in 0..(1u64 << label.len()) {
                let subset: BTreeSet<usize> = label
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, i)| *i)
                    .collect();
                let count = self
                    .face_ids()
                    .filter(|e| self.leq(f, *e) && self.label(*e) == &subset)
                    .count();
                if count != 1 {
                    report.push(
                        ComplexAxiom::UniqueComponent,
                        format!(
                            "face {f}: {count} faces above it carry label {}",
                            fmt_set(&subset)
                        ),
                    );
                }
            }
        }

        // Functoriality: all descending cover chains between two comparable
        // faces induce the same restriction.
        for f in self.face_ids() {
            for e in self.face_ids() {
                if e == f || !self.leq(e, f) {
                    continue;
                }
                let paths = self.cover_paths(f, e);
                if paths.len() < 2 {
                    continue;
                }
                let alg = self.algebra(f);
                'basis: for b in 0..alg.total_dim() {
                    let x = alg.basis_element(b);
                    let first = self.restrict_along(&paths[0], &x);
                    for path in &paths[1..] {
                        if self.restrict_along(path, &x) != first {
                            report.push(
                                ComplexAxiom::Functoriality,
                                format!(
                                    "restrictions from face {f} to face {e} disagree on basis element {b}"
                                ),
                            );
                            break 'basis;
                        }
                    }
                }
            }
        }

        // Partition: every common lower bound of E1, E2 lies below exactly
        // one maximal common lower bound.
        for e1 in self.face_ids() {
            for e2 in self.face_ids() {
                if e1.index() > e2.index() {
                    continue;
                }
                let comps = self.components(e1, e2);
                for f in self.face_ids() {
                    if !(self.leq(f, e1) && self.leq(f, e2)) {
                        continue;
                    }
                    let above = comps.iter().filter(|g| self.leq(f, **g)).count();
                    if above != 1 {
                        report.push(
                            ComplexAxiom::Partition,
                            format!(
                                "common lower bound {f} of faces {e1}, {e2} lies below {above} maximal common lower bounds"
                            ),
                        );
                    }
                }
            }
        }

        // Supplied algebra data.
        for (i, alg) in self.algebras.iter().enumerate() {
            for v in alg.validate().violations {
                report.push(
                    ComplexAxiom::AlgebraLaws,
                    format!("face {i}: {} ({})", v.law, v.witness),
                );
            }
        }
        for (&(sub, sup), map) in &self.cover_maps {
            let source = &self.algebras[sup];
            let target = &self.algebras[sub];
            for v in map.check_homomorphism(source, target).violations {
                report.push(
                    ComplexAxiom::RestrictionHomomorphism,
                    format!("restriction {sup} -> {sub}: {} ({})", v.law, v.witness),
                );
            }
        }

        report
    }
}
