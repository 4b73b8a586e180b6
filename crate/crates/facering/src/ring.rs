//! Elements of the direct sum of polynomial extensions of the per-face
//! cohomology algebras, the restriction and transfer morphisms between face
//! components, face elements, the ring structure they span, canonical
//! decomposition and membership, the grading, Hilbert series, Thom-class
//! elements and the torus structure map.
//!
//! The polynomial variables all sit in degree 2, so they are central;
//! coefficients commute past them with no sign.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::corners::{FaceComplex, FaceId};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("element is not a face element at face {face}")]
    NotFaceElement { face: usize },
    #[error("monomial {monomial} at face {face} does not use every variable of the face label")]
    SupportViolation { face: usize, monomial: String },
    #[error("monomial {monomial} at face {face} uses variables outside the face label")]
    SupportOutsideLabel { face: usize, monomial: String },
    #[error("not in the face ring: face {face}, monomial support {support:?}")]
    NotInFaceRing { face: usize, support: Vec<usize> },
    #[error("expected a coefficient tuple of length {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("torus data is malformed: {0}")]
    TorusShape(String),
}

/// A monomial in the facet variables, stored as a sparse exponent map.
/// Exponents are strictly positive where present; the empty map is the
/// monomial 1. The degree contribution is twice the exponent sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<usize, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(i: usize) -> Self {
        Monomial {
            exponents: [(i, 1)].into_iter().collect(),
        }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let exponents = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents.get(&i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exponents.iter().map(|(i, e)| (*i, *e))
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.exponents.keys().copied().collect()
    }

    /// Sum of the exponents.
    pub fn total(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn degree(&self) -> usize {
        2 * self.total() as usize
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (i, e) in &other.exponents {
            *exponents.entry(*i).or_insert(0) += e;
        }
        Monomial { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(i, e)| {
                if *e == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A finitely supported polynomial over one face: monomials in the facet
/// variables of the face label with coefficients in the face cohomology.
/// Zero coefficients are pruned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePolynomial {
    face: FaceId,
    terms: BTreeMap<Monomial, AlgebraElement>,
}

impl FacePolynomial {
    pub fn zero(face: FaceId) -> Self {
        FacePolynomial {
            face,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial, checking that every monomial only uses variables
    /// from the face label. Repeated monomials are summed, zeros pruned.
    pub fn new(
        complex: &FaceComplex,
        face: FaceId,
        terms: impl IntoIterator<Item = (Monomial, AlgebraElement)>,
    ) -> Result<Self, RingError> {
        let alg = complex.algebra(face);
        let label = complex.label(face);
        let mut map: BTreeMap<Monomial, AlgebraElement> = BTreeMap::new();
        for (monomial, coeff) in terms {
            if !monomial.support().is_subset(label) {
                return Err(RingError::SupportOutsideLabel {
                    face: face.index(),
                    monomial: monomial.to_string(),
                });
            }
            let entry = map.entry(monomial).or_insert_with(AlgebraElement::zero);
            *entry = alg.add(entry, &coeff);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(FacePolynomial { face, terms: map })
    }

    /// Single-term convenience constructor.
    pub fn term(
        complex: &FaceComplex,
        face: FaceId,
        monomial: Monomial,
        coeff: AlgebraElement,
    ) -> Result<Self, RingError> {
        FacePolynomial::new(complex, face, [(monomial, coeff)])
    }

    fn from_pruned(face: FaceId, mut terms: BTreeMap<Monomial, AlgebraElement>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        FacePolynomial { face, terms }
    }

    pub fn face(&self) -> FaceId {
        self.face
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlgebraElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &Monomial) -> Option<&AlgebraElement> {
        self.terms.get(monomial)
    }

    pub fn add(&self, complex: &FaceComplex, other: &FacePolynomial) -> FacePolynomial {
        assert_eq!(
            self.face, other.face,
            "polynomials live over different faces"
        );
        let alg = complex.algebra(self.face);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(AlgebraElement::zero);
            *entry = alg.add(entry, c);
        }
        FacePolynomial::from_pruned(self.face, terms)
    }

    pub fn scale(&self, complex: &FaceComplex, s: &Scalar) -> FacePolynomial {
        let alg = complex.algebra(self.face);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), alg.scale(s, c)))
            .collect();
        FacePolynomial::from_pruned(self.face, terms)
    }

    /// Polynomial product over the face: coefficients multiply in the face
    /// algebra, monomials multiply by adding exponents.
    pub fn mul(&self, complex: &FaceComplex, other: &FacePolynomial) -> FacePolynomial {
        assert_eq!(
            self.face, other.face,
            "polynomials live over different faces"
        );
        let alg = complex.algebra(self.face);
        let mut terms: BTreeMap<Monomial, AlgebraElement> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let product = alg
                    .mul(c1, c2)
                    .expect("coefficients belong to the face algebra");
                if product.is_zero() {
                    continue;
                }
                let m = m1.mul(m2);
                let entry = terms.entry(m).or_insert_with(AlgebraElement::zero);
                *entry = alg.add(entry, &product);
            }
        }
        FacePolynomial::from_pruned(self.face, terms)
    }

    /// Keeps the terms whose monomial support is exactly `support`.
    pub fn support_part(&self, support: &BTreeSet<usize>) -> FacePolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| &m.support() == support)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        FacePolynomial {
            face: self.face,
            terms,
        }
    }

    /// Monomial supports present in this polynomial.
    pub fn supports(&self) -> BTreeSet<BTreeSet<usize>> {
        self.terms.keys().map(|m| m.support()).collect()
    }

    /// Keeps the homogeneous part of total degree `degree` (coefficient
    /// degree plus twice the exponent sum).
    pub fn degree_part(&self, complex: &FaceComplex, degree: usize) -> FacePolynomial {
        let alg = complex.algebra(self.face);
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let md = m.degree();
                if md > degree {
                    return None;
                }
                let part = alg.degree_component(c, degree - md);
                (!part.is_zero()).then(|| (m.clone(), part))
            })
            .collect();
        FacePolynomial {
            face: self.face,
            terms,
        }
    }

    /// Total degrees in which this polynomial is nonzero.
    pub fn degrees(&self, complex: &FaceComplex) -> BTreeSet<usize> {
        let alg = complex.algebra(self.face);
        let mut out = BTreeSet::new();
        for (m, c) in &self.terms {
            for d in alg.degrees(c) {
                out.insert(d + m.degree());
            }
        }
        out
    }

    pub fn display(&self, complex: &FaceComplex) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let alg = complex.algebra(self.face);
        self.terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("({})", alg.format_element(c))
                } else {
                    format!("({})*{}", alg.format_element(c), m)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// An element of the ambient direct sum: a finitely supported family of face
/// polynomials. A missing component is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RingElement {
    components: BTreeMap<FaceId, FacePolynomial>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn from_components(parts: impl IntoIterator<Item = FacePolynomial>) -> Self {
        let components = parts
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| (p.face(), p))
            .collect();
        RingElement { components }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, face: FaceId) -> Option<&FacePolynomial> {
        self.components.get(&face)
    }

    pub fn components(&self) -> impl Iterator<Item = (FaceId, &FacePolynomial)> {
        self.components.iter().map(|(f, p)| (*f, p))
    }

    pub fn display(&self, complex: &FaceComplex) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.components
            .iter()
            .map(|(f, p)| {
                format!(
                    "face {f} {}: {}",
                    crate::ring::format_label(complex.label(*f)),
                    p.display(complex)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub(crate) fn format_label(label: &BTreeSet<usize>) -> String {
    let items: Vec<String> = label.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// The canonical decomposition of a face-ring member into face elements:
/// one polynomial per face, every monomial using the full face label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceDecomposition {
    parts: BTreeMap<FaceId, FacePolynomial>,
}

impl FaceDecomposition {
    pub fn parts(&self) -> impl Iterator<Item = (FaceId, &FacePolynomial)> {
        self.parts.iter().map(|(f, p)| (*f, p))
    }

    pub fn part(&self, face: FaceId) -> Option<&FacePolynomial> {
        self.parts.get(&face)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Rebuilds the decomposed element as the sum of its face elements.
    pub fn reconstruct(&self, complex: &FaceComplex) -> RingElement {
        let terms: Vec<(Scalar, RingElement)> = self
            .parts
            .values()
            .map(|p| {
                (
                    complex.field().one(),
                    make_face_element(complex, p.face(), p)
                        .expect("decomposition parts are supported on the full label"),
                )
            })
            .collect();
        linear_combine(complex, &terms)
    }

    pub fn display(&self, complex: &FaceComplex) -> String {
        if self.parts.is_empty() {
            return "0".to_string();
        }
        self.parts
            .iter()
            .map(|(f, p)| {
                format!(
                    "part at face {f} {}: {}",
                    format_label(complex.label(*f)),
                    p.display(complex)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Restriction morphism between face components: coefficients restrict along
/// the face containment, monomials are unchanged; the zero polynomial when
/// the target is not a subface of the source.
pub fn phi(complex: &FaceComplex, from: FaceId, to: FaceId, p: &FacePolynomial) -> FacePolynomial {
    assert_eq!(
        p.face(),
        from,
        "polynomial does not live over the source face"
    );
    if !complex.leq(to, from) {
        return FacePolynomial::zero(to);
    }
    let terms = p
        .terms()
        .map(|(m, c)| {
            let restricted = complex
                .restrict_coeff(from, to, c)
                .expect("containment checked above");
            (m.clone(), restricted)
        })
        .collect();
    FacePolynomial::from_pruned(to, terms)
}

/// Builds the face element determined by a polynomial at `face` whose every
/// monomial uses the whole face label: the component at each subface is the
/// restriction, all other components vanish.
pub fn make_face_element(
    complex: &FaceComplex,
    face: FaceId,
    p: &FacePolynomial,
) -> Result<RingElement, RingError> {
    assert_eq!(
        p.face(),
        face,
        "polynomial does not live over the given face"
    );
    let label = complex.label(face);
    for (m, _) in p.terms() {
        if &m.support() != label {
            return Err(RingError::SupportViolation {
                face: face.index(),
                monomial: m.to_string(),
            });
        }
    }
    let components = complex
        .face_ids()
        .filter(|f| complex.leq(*f, face))
        .map(|f| phi(complex, face, f, p))
        .collect::<Vec<_>>();
    Ok(RingElement::from_components(components))
}

/// Whether every component of `x` is the restriction of its component at
/// `face`, with nothing supported outside the subfaces of `face`.
pub fn is_face_element(complex: &FaceComplex, x: &RingElement, face: FaceId) -> bool {
    let at_face = x
        .component(face)
        .cloned()
        .unwrap_or_else(|| FacePolynomial::zero(face));
    for f in complex.face_ids() {
        let got = x
            .component(f)
            .cloned()
            .unwrap_or_else(|| FacePolynomial::zero(f));
        if complex.leq(f, face) {
            if got != phi(complex, face, f, &at_face) {
                return false;
            }
        } else if !got.is_zero() {
            return false;
        }
    }
    true
}

/// Transfer of a face element at `e` to the subface `g`: every component is
/// the further restriction of the `g`-restriction of the `e`-component.
/// The result is asserted to be a face element at `g`.
pub fn theta(
    complex: &FaceComplex,
    e: FaceId,
    g: FaceId,
    x: &RingElement,
) -> Result<RingElement, RingError> {
    if !is_face_element(complex, x, e) {
        return Err(RingError::NotFaceElement { face: e.index() });
    }
    let at_e = x
        .component(e)
        .cloned()
        .unwrap_or_else(|| FacePolynomial::zero(e));
    let inner = phi(complex, e, g, &at_e);
    let components: Vec<FacePolynomial> = complex
        .face_ids()
        .map(|f| phi(complex, g, f, &inner))
        .collect();
    let result = RingElement::from_components(components);
    assert!(
        is_face_element(complex, &result, g),
        "transfer produced a non-face element"
    );
    Ok(result)
}

/// Componentwise scalar combination with pruning of zeros.
pub fn linear_combine(complex: &FaceComplex, terms: &[(Scalar, RingElement)]) -> RingElement {
    let mut acc: BTreeMap<FaceId, FacePolynomial> = BTreeMap::new();
    for (s, x) in terms {
        if s.is_zero() {
            continue;
        }
        for (f, p) in x.components() {
            let scaled = p.scale(complex, s);
            match acc.get_mut(&f) {
                Some(existing) => *existing = existing.add(complex, &scaled),
                None => {
                    acc.insert(f, scaled);
                }
            }
        }
    }
    RingElement::from_components(acc.into_values())
}

/// Ring product in the ambient direct sum: componentwise polynomial product
/// per face.
pub fn multiply(complex: &FaceComplex, x: &RingElement, y: &RingElement) -> RingElement {
    let components: Vec<FacePolynomial> = x
        .components()
        .filter_map(|(f, p)| y.component(f).map(|q| p.mul(complex, q)))
        .collect();
    RingElement::from_components(components)
}

/// The unit: the face element with unit coefficient at the maximal face.
pub fn unit_element(complex: &FaceComplex) -> RingElement {
    let q = complex.max_face();
    let p = FacePolynomial::term(
        complex,
        q,
        Monomial::one(),
        complex.algebra(q).unit_element(),
    )
    .expect("unit polynomial is well formed");
    make_face_element(complex, q, &p).expect("unit has empty support everywhere")
}

/// The homogeneous part of `x` in total degree `degree`.
pub fn homogeneous_component(complex: &FaceComplex, x: &RingElement, degree: usize) -> RingElement {
    let components: Vec<FacePolynomial> = x
        .components()
        .map(|(_, p)| p.degree_part(complex, degree))
        .collect();
    RingElement::from_components(components)
}

/// Total degrees in which `x` is nonzero.
pub fn element_degrees(complex: &FaceComplex, x: &RingElement) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (_, p) in x.components() {
        out.extend(p.degrees(complex));
    }
    out
}

/// Canonical support-based decomposition. Faces are processed in increasing
/// codimension; at each face the part of the component supported on a proper
/// sublabel must agree with the restriction of the part already assigned to
/// the unique face carrying that sublabel, and the full-label part becomes
/// this face's own part. Succeeds exactly on members of the face ring.
pub fn decompose(complex: &FaceComplex, x: &RingElement) -> Result<FaceDecomposition, RingError> {
    let mut parts: BTreeMap<FaceId, FacePolynomial> = BTreeMap::new();
    for f in complex.faces_by_codim() {
        let component = x
            .component(f)
            .cloned()
            .unwrap_or_else(|| FacePolynomial::zero(f));
        let mut supports = component.supports();
        for (e, part) in &parts {
            if complex.leq(f, *e) && !part.is_zero() {
                supports.insert(complex.label(*e).clone());
            }
        }
        let own_label = complex.label(f).clone();
        for support in supports {
            if support == own_label {
                continue;
            }
            let e = complex
                .face_of_label(f, &support)
                .expect("support is a sublabel of a validated face");
            let got = component.support_part(&support);
            let want = match parts.get(&e) {
                Some(part) => phi(complex, e, f, part),
                None => FacePolynomial::zero(f),
            };
            if got != want {
                return Err(RingError::NotInFaceRing {
                    face: f.index(),
                    support: support.into_iter().collect(),
                });
            }
        }
        let own = component.support_part(&own_label);
        if !own.is_zero() {
            parts.insert(f, own);
        }
    }
    let decomposition = FaceDecomposition { parts };
    debug_assert_eq!(&decomposition.reconstruct(complex), x);
    Ok(decomposition)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of exponent vectors with all entries at least 1, `parts` entries,
/// summing to `total`.
pub(crate) fn positive_compositions(total: u64, parts: u64) -> u64 {
    if parts == 0 {
        return if total == 0 { 1 } else { 0 };
    }
    if total < parts {
        return 0;
    }
    binomial(total - 1, parts - 1)
}

/// Exact dimension of each graded piece of the face ring, for degrees
/// `0..=max_degree`. Each face contributes its cohomology tensored with the
/// strictly positive monomials in its label variables.
pub fn hilbert(complex: &FaceComplex, max_degree: usize) -> Vec<u64> {
    let mut dims = vec![0u64; max_degree + 1];
    for f in complex.face_ids() {
        let k = complex.label(f).len() as u64;
        let alg = complex.algebra(f);
        for (d, dim) in dims.iter_mut().enumerate() {
            let mut j = if k == 0 { 0 } else { k };
            loop {
                let monomial_degree = 2 * j as usize;
                if monomial_degree > d {
                    break;
                }
                let coeff_dim = alg.dim(d - monomial_degree) as u64;
                *dim += coeff_dim * positive_compositions(j, k);
                if k == 0 {
                    break;
                }
                j += 1;
            }
        }
    }
    dims
}

/// The Thom-class element of facet `i`: the face element with polynomial
/// `x_i` and unit coefficient at the facet, restricted to every subface.
pub fn tau(complex: &FaceComplex, i: usize) -> RingElement {
    assert!(i >= 1 && i <= complex.m(), "facet index out of range");
    let label: BTreeSet<usize> = [i].into_iter().collect();
    let facet = complex
        .faces()
        .find(|f| f.label == label)
        .expect("validated complex has one facet per index")
        .id;
    let p = FacePolynomial::term(
        complex,
        facet,
        Monomial::variable(i),
        complex.algebra(facet).unit_element(),
    )
    .expect("x_i is supported inside the facet label");
    make_face_element(complex, facet, &p).expect("x_i uses the whole facet label")
}

/// Facet weights and the degree-two structure map of a torus action: `v`
/// pairs facets with integer homology classes, `c` sends the rank-`n`
/// degree-two space of the classifying algebra into the cohomology of the
/// maximal face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusData {
    n: usize,
    v: Vec<Vec<i64>>,
    /// One row per basis element of the maximal face's cohomology, one
    /// column per torus coordinate.
    c: Vec<Vec<Scalar>>,
}

impl TorusData {
    pub fn new(
        complex: &FaceComplex,
        n: usize,
        v: Vec<Vec<i64>>,
        c: Vec<Vec<Scalar>>,
    ) -> Result<Self, RingError> {
        if v.len() != complex.m() {
            return Err(RingError::TorusShape(format!(
                "expected one weight per facet ({}), got {}",
                complex.m(),
                v.len()
            )));
        }
        if let Some(w) = v.iter().find(|w| w.len() != n) {
            return Err(RingError::TorusShape(format!(
                "weight {:?} does not have length n = {n}",
                w
            )));
        }
        let q_dim = complex.algebra(complex.max_face()).total_dim();
        if c.len() != q_dim {
            return Err(RingError::TorusShape(format!(
                "structure matrix has {} rows, the maximal face cohomology has dimension {q_dim}",
                c.len()
            )));
        }
        if let Some(row) = c.iter().find(|row| row.len() != n) {
            return Err(RingError::TorusShape(format!(
                "structure matrix row has {} entries, expected n = {n}",
                row.len()
            )));
        }
        Ok(TorusData { n, v, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.v
    }

    pub fn structure_matrix(&self) -> &[Vec<Scalar>] {
        &self.c
    }
}

/// Image of a degree-two class of the classifying algebra in the face ring:
/// the face element carried by the structure map plus the weight-paired
/// combination of Thom classes.
pub fn eta(
    complex: &FaceComplex,
    torus: &TorusData,
    u: &[Scalar],
) -> Result<RingElement, RingError> {
    if u.len() != torus.n {
        return Err(RingError::ShapeMismatch {
            expected: torus.n,
            got: u.len(),
        });
    }
    let field = complex.field();
    let q = complex.max_face();
    let alg = complex.algebra(q);
    let cu = alg
        .element(torus.c.iter().enumerate().map(|(row, entries)| {
            let mut acc = field.zero();
            for (col, c) in entries.iter().enumerate() {
                acc = field.add(&acc, &field.mul(c, &u[col]));
            }
            (row, acc)
        }))
        .expect("structure matrix rows index the maximal face basis");
    let mut terms: Vec<(Scalar, RingElement)> = Vec::new();
    if !cu.is_zero() {
        let p = FacePolynomial::term(complex, q, Monomial::one(), cu)
            .expect("bare coefficient at the maximal face");
        let elt = make_face_element(complex, q, &p).expect("empty support at the maximal face");
        terms.push((field.one(), elt));
    }
    for (i, weight) in torus.v.iter().enumerate() {
        let mut pairing = field.zero();
        for (j, w) in weight.iter().enumerate() {
            pairing = field.add(&pairing, &field.mul(&field.from_integer(*w), &u[j]));
        }
        if !pairing.is_zero() {
            terms.push((pairing, tau(complex, i + 1)));
        }
    }
    Ok(linear_combine(complex, &terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::build_builtin;
    use crate::scalar::FieldSpec;

    fn bigon() -> FaceComplex {
        build_builtin("bigon", None).unwrap().complex
    }

    fn triangle() -> FaceComplex {
        build_builtin("triangle", None).unwrap().complex
    }

    fn connected_sum() -> crate::models::Model {
        build_builtin("connected-sum", None).unwrap()
    }

    fn q_face_element(complex: &FaceComplex, coeff: AlgebraElement) -> RingElement {
        let q = complex.max_face();
        let p = FacePolynomial::term(complex, q, Monomial::one(), coeff).unwrap();
        make_face_element(complex, q, &p).unwrap()
    }

    #[test]
    fn phi_restricts_and_kills_incomparable_targets() {
        let c = bigon();
        let f1 = FaceId::new(1);
        let f2 = FaceId::new(2);
        let p = FaceId::new(3);
        let x1 = FacePolynomial::term(&c, f1, Monomial::variable(1), c.algebra(f1).unit_element())
            .unwrap();
        let at_p = phi(&c, f1, p, &x1);
        assert_eq!(
            at_p,
            FacePolynomial::term(&c, p, Monomial::variable(1), c.algebra(p).unit_element())
                .unwrap()
        );
        assert!(phi(&c, f1, f2, &x1).is_zero());
    }

    #[test]
    fn phi_kills_positive_degree_coefficients_into_acyclic_faces() {
        let model = connected_sum();
        let c = &model.complex;
        let q = c.max_face();
        let edge = FaceId::new(1);
        let b1 =
            FacePolynomial::term(c, q, Monomial::one(), c.algebra(q).basis_element(1)).unwrap();
        assert!(phi(c, q, edge, &b1).is_zero());
    }

    #[test]
    fn tau_components_match_the_definition() {
        let c = bigon();
        let t1 = tau(&c, 1);
        for (face, expect) in [(1usize, true), (3, true), (4, true), (0, false), (2, false)] {
            let id = FaceId::new(face);
            match t1.component(id) {
                Some(p) => {
                    assert!(expect);
                    assert_eq!(
                        p,
                        &FacePolynomial::term(
                            &c,
                            id,
                            Monomial::variable(1),
                            c.algebra(id).unit_element()
                        )
                        .unwrap()
                    );
                }
                None => assert!(!expect),
            }
        }
        for i in 1..=c.m() {
            let facet = c
                .faces()
                .find(|f| f.label == [i].into_iter().collect())
                .unwrap()
                .id;
            assert!(is_face_element(&c, &tau(&c, i), facet));
        }
    }

    #[test]
    fn theta_examples_from_the_bigon() {
        let c = bigon();
        let f1 = FaceId::new(1);
        let f2 = FaceId::new(2);
        let p = FaceId::new(3);
        let t1 = tau(&c, 1);
        // Transfer to a non-subface vanishes.
        assert!(theta(&c, f1, f2, &t1).unwrap().is_zero());
        // Transfer down to the vertex keeps only the vertex component.
        let moved = theta(&c, f1, p, &t1).unwrap();
        let expected = RingElement::from_components([FacePolynomial::term(
            &c,
            p,
            Monomial::variable(1),
            c.algebra(p).unit_element(),
        )
        .unwrap()]);
        assert_eq!(moved, expected);
        assert!(is_face_element(&c, &moved, p));
        // Transfer at the maximal face is the identity.
        let q = c.max_face();
        let one = unit_element(&c);
        assert_eq!(theta(&c, q, q, &one).unwrap(), one);
    }

    #[test]
    fn theta_rejects_non_face_elements() {
        let c = bigon();
        let f1 = FaceId::new(1);
        let lone = RingElement::from_components([FacePolynomial::term(
            &c,
            f1,
            Monomial::variable(1),
            c.algebra(f1).unit_element(),
        )
        .unwrap()]);
        assert_eq!(
            theta(&c, f1, FaceId::new(3), &lone),
            Err(RingError::NotFaceElement { face: 1 })
        );
    }

    #[test]
    fn make_face_element_examples() {
        let c = bigon();
        let p = FaceId::new(3);
        let x1x2 = Monomial::from_exponents([(1, 1), (2, 1)]);
        let poly = FacePolynomial::term(&c, p, x1x2, c.algebra(p).unit_element()).unwrap();
        let elt = make_face_element(&c, p, &poly).unwrap();
        assert_eq!(elt.components().count(), 1);
        assert_eq!(elt.component(p), Some(&poly));

        let t = triangle();
        let f1 = FaceId::new(1);
        let poly =
            FacePolynomial::term(&t, f1, Monomial::variable(1), t.algebra(f1).unit_element())
                .unwrap();
        let elt = make_face_element(&t, f1, &poly).unwrap();
        let faces: Vec<usize> = elt.components().map(|(f, _)| f.index()).collect();
        assert_eq!(faces, vec![1, 4, 6]);

        let c = bigon();
        let f1 = FaceId::new(1);
        let bare =
            FacePolynomial::term(&c, f1, Monomial::one(), c.algebra(f1).unit_element()).unwrap();
        assert!(matches!(
            make_face_element(&c, f1, &bare),
            Err(RingError::SupportViolation { face: 1, .. })
        ));
    }

    #[test]
    fn is_face_element_examples() {
        let c = bigon();
        let f1 = FaceId::new(1);
        assert!(is_face_element(&c, &tau(&c, 1), f1));
        let lone = RingElement::from_components([FacePolynomial::term(
            &c,
            f1,
            Monomial::variable(1),
            c.algebra(f1).unit_element(),
        )
        .unwrap()]);
        assert!(!is_face_element(&c, &lone, f1));
        for f in c.face_ids() {
            assert!(is_face_element(&c, &RingElement::zero(), f));
        }
    }

    #[test]
    fn linear_combine_examples() {
        let c = bigon();
        let field = c.field();
        let t1 = tau(&c, 1);
        let t2 = tau(&c, 2);
        assert!(linear_combine(
            &c,
            &[
                (field.one(), t1.clone()),
                (field.from_integer(-1), t1.clone())
            ]
        )
        .is_zero());
        assert!(linear_combine(&c, &[(field.zero(), t1.clone())]).is_zero());
        let sum = linear_combine(&c, &[(field.one(), t1), (field.one(), t2)]);
        let p = FaceId::new(3);
        let expected_at_p = FacePolynomial::new(
            &c,
            p,
            [
                (Monomial::variable(1), c.algebra(p).unit_element()),
                (Monomial::variable(2), c.algebra(p).unit_element()),
            ],
        )
        .unwrap();
        assert_eq!(sum.component(p), Some(&expected_at_p));
        assert_eq!(sum.components().count(), 4);
    }

    #[test]
    fn multiply_examples() {
        let c = bigon();
        let one = unit_element(&c);
        let t1 = tau(&c, 1);
        let t2 = tau(&c, 2);
        assert_eq!(multiply(&c, &one, &t2), t2);
        let product = multiply(&c, &t1, &t2);
        let x1x2 = Monomial::from_exponents([(1, 1), (2, 1)]);
        let faces: Vec<usize> = product.components().map(|(f, _)| f.index()).collect();
        assert_eq!(faces, vec![3, 4]);
        for f in [FaceId::new(3), FaceId::new(4)] {
            assert_eq!(
                product.component(f).unwrap(),
                &FacePolynomial::term(&c, f, x1x2.clone(), c.algebra(f).unit_element()).unwrap()
            );
        }

        let t = triangle();
        let triple = multiply(&t, &tau(&t, 1), &multiply(&t, &tau(&t, 2), &tau(&t, 3)));
        assert!(triple.is_zero());
    }

    #[test]
    fn tau_squared_is_still_a_face_element() {
        let t = triangle();
        let f1 = FaceId::new(1);
        let square = multiply(&t, &tau(&t, 1), &tau(&t, 1));
        assert!(is_face_element(&t, &square, f1));
        let x1sq = Monomial::from_exponents([(1, 2)]);
        let faces: Vec<usize> = square.components().map(|(f, _)| f.index()).collect();
        assert_eq!(faces, vec![1, 4, 6]);
        for (f, p) in square.components() {
            assert_eq!(
                p,
                &FacePolynomial::term(&t, f, x1sq.clone(), t.algebra(f).unit_element()).unwrap()
            );
        }
    }

    #[test]
    fn decompose_examples() {
        let c = bigon();
        let product = multiply(&c, &tau(&c, 1), &tau(&c, 2));
        let decomposition = decompose(&c, &product).unwrap();
        let x1x2 = Monomial::from_exponents([(1, 1), (2, 1)]);
        let parts: Vec<usize> = decomposition.parts().map(|(f, _)| f.index()).collect();
        assert_eq!(parts, vec![3, 4]);
        for (f, p) in decomposition.parts() {
            assert_eq!(
                p,
                &FacePolynomial::term(&c, f, x1x2.clone(), c.algebra(f).unit_element()).unwrap()
            );
        }

        let d = decompose(&c, &tau(&c, 1)).unwrap();
        assert_eq!(d.parts().count(), 1);
        assert_eq!(
            d.part(FaceId::new(1)).unwrap(),
            &FacePolynomial::term(
                &c,
                FaceId::new(1),
                Monomial::variable(1),
                c.algebra(FaceId::new(1)).unit_element()
            )
            .unwrap()
        );

        let lone = RingElement::from_components([FacePolynomial::term(
            &c,
            FaceId::new(1),
            Monomial::variable(1),
            c.algebra(FaceId::new(1)).unit_element(),
        )
        .unwrap()]);
        assert_eq!(
            decompose(&c, &lone),
            Err(RingError::NotInFaceRing {
                face: 3,
                support: vec![1]
            })
        );
        assert!(decompose(&c, &RingElement::zero()).unwrap().is_empty());
    }

    #[test]
    fn homogeneous_component_examples() {
        let c = bigon();
        let t1 = tau(&c, 1);
        assert_eq!(homogeneous_component(&c, &t1, 2), t1);
        assert!(homogeneous_component(&c, &t1, 3).is_zero());

        let model = connected_sum();
        let cx = &model.complex;
        let b1 = q_face_element(cx, cx.algebra(cx.max_face()).basis_element(1));
        let mix = linear_combine(
            cx,
            &[
                (cx.field().one(), b1.clone()),
                (cx.field().one(), tau(cx, 1)),
            ],
        );
        assert_eq!(homogeneous_component(cx, &mix, 1), b1);
        // homogeneous components partition the element
        let degrees = element_degrees(cx, &mix);
        let terms: Vec<(Scalar, RingElement)> = degrees
            .iter()
            .map(|d| (cx.field().one(), homogeneous_component(cx, &mix, *d)))
            .collect();
        assert_eq!(linear_combine(cx, &terms), mix);
    }

    #[test]
    fn hilbert_matches_the_frozen_sequences() {
        let c = bigon();
        assert_eq!(hilbert(&c, 6), vec![1, 0, 2, 0, 4, 0, 6]);
        let t = triangle();
        assert_eq!(hilbert(&t, 8), vec![1, 0, 3, 0, 6, 0, 9, 0, 12]);
        let model = connected_sum();
        assert_eq!(hilbert(&model.complex, 6), vec![1, 2, 3, 0, 6, 0, 9]);
    }

    #[test]
    fn eta_examples() {
        let c = build_builtin("bigon", None).unwrap();
        let torus = c.torus.as_ref().unwrap();
        let field = c.complex.field();
        let zero_u = vec![field.zero(), field.zero()];
        assert!(eta(&c.complex, torus, &zero_u).unwrap().is_zero());
        let e1 = vec![field.one(), field.zero()];
        assert_eq!(eta(&c.complex, torus, &e1).unwrap(), tau(&c.complex, 1));
        let e2 = vec![field.zero(), field.one()];
        assert_eq!(eta(&c.complex, torus, &e2).unwrap(), tau(&c.complex, 2));
        assert_eq!(
            eta(&c.complex, torus, &[field.one()]),
            Err(RingError::ShapeMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn eta_on_the_connected_sum_hits_the_structure_map() {
        let model = connected_sum();
        let cx = &model.complex;
        let torus = model.torus.as_ref().unwrap();
        let field = cx.field();
        let e1 = vec![field.one(), field.zero()];
        let got = eta(cx, torus, &e1).unwrap();
        let b1 = q_face_element(cx, cx.algebra(cx.max_face()).basis_element(1));
        let expected = linear_combine(
            cx,
            &[
                (field.one(), b1),
                (field.one(), tau(cx, 1)),
                (field.one(), tau(cx, 3)),
            ],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn positive_composition_counts() {
        assert_eq!(positive_compositions(0, 0), 1);
        assert_eq!(positive_compositions(3, 0), 0);
        assert_eq!(positive_compositions(3, 1), 1);
        assert_eq!(positive_compositions(3, 2), 2);
        assert_eq!(positive_compositions(5, 2), 4);
        assert_eq!(positive_compositions(1, 2), 0);
    }

    #[test]
    fn products_of_odd_classes_pick_up_the_sign() {
        // A boundaryless model whose maximal face carries the torus algebra:
        // products of the two degree-one classes anticommute.
        use crate::corners::Face;
        use std::collections::{BTreeMap, BTreeSet};
        let alg = crate::algebra::tests::torus_algebra();
        let field = alg.field();
        let faces = vec![Face {
            id: FaceId::new(0),
            codim: 0,
            label: BTreeSet::new(),
        }];
        let c = FaceComplex::new(field, 0, faces, Vec::new(), vec![alg], BTreeMap::new()).unwrap();
        assert!(c.validate().is_pass());
        let q = c.max_face();
        let class = |i: usize| {
            let p = FacePolynomial::term(&c, q, Monomial::one(), c.algebra(q).basis_element(i))
                .unwrap();
            make_face_element(&c, q, &p).unwrap()
        };
        let forward = multiply(&c, &class(1), &class(2));
        assert_eq!(forward, class(3));
        let backward = multiply(&c, &class(2), &class(1));
        assert_eq!(
            backward,
            linear_combine(&c, &[(field.from_integer(-1), class(3))])
        );
        assert!(multiply(&c, &class(1), &class(1)).is_zero());
        assert_eq!(hilbert(&c, 3), vec![1, 2, 1, 0]);
    }

    #[test]
    fn boundaryless_hilbert_is_the_cohomology_dimension() {
        let model = build_builtin("rp2-no-boundary", None).unwrap();
        assert_eq!(hilbert(&model.complex, 4), vec![1, 1, 1, 0, 0]);
    }

    #[test]
    fn ring_unit_is_neutral_under_field_change() {
        let c = build_builtin("triangle", Some(FieldSpec::prime(2).unwrap()))
            .unwrap()
            .complex;
        let one = unit_element(&c);
        let t1 = tau(&c, 1);
        assert_eq!(multiply(&c, &one, &t1), t1);
    }
}
