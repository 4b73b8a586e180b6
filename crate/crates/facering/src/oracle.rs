//! Independent brute-force verifiers for the fast paths: a Stanley-Reisner
//! monomial count for complexes with acyclic faces and injective labels, an
//! exhaustive basis enumeration with exact rank computation, and a
//! linear-algebra membership test over the enumerated generators.
//!
//! These deliberately take a different algorithmic route (enumeration plus
//! exact elimination) from the closed-form and peeling fast paths they check.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::corners::{FaceComplex, FaceId};
use crate::linalg;
use crate::ring::{
    element_degrees, homogeneous_component, make_face_element, positive_compositions,
    FacePolynomial, Monomial, RingElement,
};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("face {face} has cohomology in positive degrees; the Stanley-Reisner count needs acyclic faces")]
    NotAcyclic { face: usize },
    #[error(
        "faces {a} and {b} share the label set; the Stanley-Reisner count needs injective labels"
    )]
    DuplicateLabelSets { a: usize, b: usize },
}

/// The set of face labels viewed as an abstract simplicial complex; valid
/// only when the label map is injective on faces.
#[derive(Debug, Clone)]
pub struct LabelComplex {
    sets: BTreeSet<BTreeSet<usize>>,
}

impl LabelComplex {
    pub fn from_complex(complex: &FaceComplex) -> Result<Self, OracleError> {
        let mut seen: BTreeMap<&BTreeSet<usize>, FaceId> = BTreeMap::new();
        for face in complex.faces() {
            if let Some(previous) = seen.insert(&face.label, face.id) {
                return Err(OracleError::DuplicateLabelSets {
                    a: previous.index(),
                    b: face.id.index(),
                });
            }
        }
        Ok(LabelComplex {
            sets: complex.faces().map(|f| f.label.clone()).collect(),
        })
    }

    pub fn sets(&self) -> impl Iterator<Item = &BTreeSet<usize>> {
        self.sets.iter()
    }
}

/// Classical face-ring dimension count: in degree `2j` the number of
/// monomials of total degree `j` whose support is a face label; odd degrees
/// are zero. Requires acyclic faces and injective labels.
pub fn sr_hilbert(complex: &FaceComplex, max_degree: usize) -> Result<Vec<u64>, OracleError> {
    for face in complex.faces() {
        let alg = complex.algebra(face.id);
        if alg.total_dim() != 1 {
            return Err(OracleError::NotAcyclic {
                face: face.id.index(),
            });
        }
    }
    let labels = LabelComplex::from_complex(complex)?;
    let mut dims = vec![0u64; max_degree + 1];
    for (d, dim) in dims.iter_mut().enumerate() {
        if d % 2 != 0 {
            continue;
        }
        let j = (d / 2) as u64;
        for set in labels.sets() {
            *dim += positive_compositions(j, set.len() as u64);
        }
    }
    Ok(dims)
}

/// All strictly positive exponent vectors over `vars` with the given sum,
/// in lexicographic order.
fn positive_monomials(vars: &[usize], total: u32) -> Vec<Monomial> {
    fn go(vars: &[usize], total: u32, current: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {
                if total == 0 {
                    out.push(Monomial::from_exponents(current.iter().copied()));
                }
            }
            [first, rest @ ..] => {
                let reserve = rest.len() as u32;
                if total < 1 + reserve {
                    return;
                }
                for e in 1..=total - reserve {
                    current.push((*first, e));
                    go(rest, total - e, current, out);
                    current.pop();
                }
            }
        }
    }
    if vars.is_empty() {
        return if total == 0 {
            vec![Monomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    go(vars, total, &mut Vec::new(), &mut out);
    out
}

/// A spanning generator: a single-term face element, remembered by its face,
/// monomial and coefficient basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub face: FaceId,
    pub monomial: Monomial,
    pub basis_index: usize,
    pub element: RingElement,
}

/// Enumerates every face element generator of the given total degree: one
/// per face, strictly positive monomial over the face label, and basis
/// coefficient filling up the remaining degree.
fn generators_of_degree(complex: &FaceComplex, degree: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for face in complex.faces_by_codim() {
        let label: Vec<usize> = complex.label(face).iter().copied().collect();
        let k = label.len() as u32;
        let alg = complex.algebra(face);
        let mut j = k;
        loop {
            let monomial_degree = 2 * j as usize;
            if monomial_degree > degree {
                break;
            }
            let coeff_degree = degree - monomial_degree;
            for monomial in positive_monomials(&label, j) {
                for basis_index in alg.degree_range(coeff_degree) {
                    let poly = FacePolynomial::term(
                        complex,
                        face,
                        monomial.clone(),
                        alg.basis_element(basis_index),
                    )
                    .expect("generator monomial is supported on the face label");
                    let element = make_face_element(complex, face, &poly)
                        .expect("generator monomial uses the whole face label");
                    out.push(Generator {
                        face,
                        monomial: monomial.clone(),
                        basis_index,
                        element,
                    });
                }
            }
            if k == 0 {
                break;
            }
            j += 1;
        }
    }
    out
}

/// Coordinate slots of the ambient direct sum touched by the given elements:
/// (face, monomial, coefficient basis index) triples.
fn coordinate_slots<'a>(
    elements: impl Iterator<Item = &'a RingElement>,
) -> BTreeMap<(FaceId, Monomial, usize), usize> {
    let mut slots = BTreeMap::new();
    for element in elements {
        for (face, poly) in element.components() {
            for (monomial, coeff) in poly.terms() {
                for (basis_index, _) in coeff.coeffs() {
                    let key = (face, monomial.clone(), basis_index);
                    let next = slots.len();
                    slots.entry(key).or_insert(next);
                }
            }
        }
    }
    slots
}

fn coordinate_row(
    complex: &FaceComplex,
    slots: &BTreeMap<(FaceId, Monomial, usize), usize>,
    element: &RingElement,
) -> Vec<Scalar> {
    let field = complex.field();
    let mut row = vec![field.zero(); slots.len()];
    for (face, poly) in element.components() {
        for (monomial, coeff) in poly.terms() {
            for (basis_index, scalar) in coeff.coeffs() {
                let slot = slots[&(face, monomial.clone(), basis_index)];
                row[slot] = scalar.clone();
            }
        }
    }
    row
}

/// Dimension sequence computed by embedding every enumerated generator into
/// the ambient direct sum and taking exact ranks degree by degree.
pub fn brute_basis_hilbert(complex: &FaceComplex, max_degree: usize) -> Vec<u64> {
    let field = complex.field();
    (0..=max_degree)
        .map(|degree| {
            let generators = generators_of_degree(complex, degree);
            if generators.is_empty() {
                return 0;
            }
            let slots = coordinate_slots(generators.iter().map(|g| &g.element));
            let rows: Vec<Vec<Scalar>> = generators
                .iter()
                .map(|g| coordinate_row(complex, &slots, &g.element))
                .collect();
            linalg::rank(&field, &rows) as u64
        })
        .collect()
}

/// A successful membership certificate: the coefficients of a representation
/// of the element over the enumerated generators.
#[derive(Debug, Clone)]
pub struct MembershipWitness {
    pub combination: Vec<(FaceId, Monomial, usize, Scalar)>,
}

#[derive(Debug, Clone)]
pub struct MembershipOutcome {
    pub member: bool,
    pub witness: Option<MembershipWitness>,
}

/// Solves the exact linear system expressing the element in the span of all
/// face-element generators, degree by degree.
pub fn naive_membership(complex: &FaceComplex, x: &RingElement) -> MembershipOutcome {
    let field = complex.field();
    let mut combination = Vec::new();
    for degree in element_degrees(complex, x) {
        let target = homogeneous_component(complex, x, degree);
        let generators = generators_of_degree(complex, degree);
        let slots = coordinate_slots(generators.iter().map(|g| &g.element).chain([&target]));
        // Columns are generators, rows are coordinate slots.
        let mut matrix = vec![vec![field.zero(); generators.len()]; slots.len()];
        for (col, generator) in generators.iter().enumerate() {
            let row = coordinate_row(complex, &slots, &generator.element);
            for (slot, value) in row.into_iter().enumerate() {
                matrix[slot][col] = value;
            }
        }
        let rhs = coordinate_row(complex, &slots, &target);
        match linalg::solve(&field, &matrix, &rhs) {
            Some(solution) => {
                for (generator, coefficient) in generators.iter().zip(solution) {
                    if !coefficient.is_zero() {
                        combination.push((
                            generator.face,
                            generator.monomial.clone(),
                            generator.basis_index,
                            coefficient,
                        ));
                    }
                }
            }
            None => {
                return MembershipOutcome {
                    member: false,
                    witness: None,
                }
            }
        }
    }
    MembershipOutcome {
        member: true,
        witness: Some(MembershipWitness { combination }),
    }
}
