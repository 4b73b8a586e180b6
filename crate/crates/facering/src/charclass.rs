//! Total equivariant Stiefel-Whitney and Pontrjagin classes as face-ring
//! elements: the class of the orbit free part transported to the maximal
//! face, multiplied by one factor per facet Thom class.

use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::corners::FaceComplex;
use crate::ring::{
    linear_combine, make_face_element, multiply, tau, unit_element, FacePolynomial, Monomial,
    RingElement,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharClassError {
    #[error("Stiefel-Whitney classes require characteristic 2, the complex is over characteristic {got}")]
    WrongCharacteristic { got: u64 },
    #[error("the degree-0 component of a total class must be 1")]
    DegreeZeroNotUnit,
}

/// Total characteristic classes of the orbit free part, supplied as input:
/// a total Stiefel-Whitney class (meaningful over characteristic 2) and a
/// total Pontrjagin class, both elements of the maximal face's cohomology
/// with degree-0 component equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharClassData {
    sw: AlgebraElement,
    pont: AlgebraElement,
}

impl CharClassData {
    pub fn new(
        complex: &FaceComplex,
        sw: AlgebraElement,
        pont: AlgebraElement,
    ) -> Result<Self, CharClassError> {
        let alg = complex.algebra(complex.max_face());
        for class in [&sw, &pont] {
            if alg.degree_component(class, 0) != alg.unit_element() {
                return Err(CharClassError::DegreeZeroNotUnit);
            }
        }
        Ok(CharClassData { sw, pont })
    }

    pub fn sw(&self) -> &AlgebraElement {
        &self.sw
    }

    pub fn pont(&self) -> &AlgebraElement {
        &self.pont
    }
}

fn base_class_element(complex: &FaceComplex, class: &AlgebraElement) -> RingElement {
    let q = complex.max_face();
    let p = FacePolynomial::term(complex, q, Monomial::one(), class.clone())
        .expect("bare coefficient at the maximal face");
    make_face_element(complex, q, &p).expect("empty support at the maximal face")
}

fn one_plus(complex: &FaceComplex, x: &RingElement) -> RingElement {
    let field = complex.field();
    linear_combine(
        complex,
        &[
            (field.one(), unit_element(complex)),
            (field.one(), x.clone()),
        ],
    )
}

/// Total equivariant Stiefel-Whitney class: the transported base class times
/// the product of `1 + tau_i` over all facets, expanded exactly.
pub fn sw_total(
    complex: &FaceComplex,
    data: &CharClassData,
) -> Result<RingElement, CharClassError> {
    if complex.field().characteristic() != 2 {
        return Err(CharClassError::WrongCharacteristic {
            got: complex.field().characteristic(),
        });
    }
    let mut acc = base_class_element(complex, &data.sw);
    for i in 1..=complex.m() {
        acc = multiply(complex, &acc, &one_plus(complex, &tau(complex, i)));
    }
    Ok(acc)
}

/// Total equivariant Pontrjagin class: the transported base class times the
/// product of `1 + tau_i^2` over all facets, expanded exactly. Permitted
/// over any supported field.
pub fn pontrjagin_total(complex: &FaceComplex, data: &CharClassData) -> RingElement {
    let mut acc = base_class_element(complex, &data.pont);
    for i in 1..=complex.m() {
        let t = tau(complex, i);
        let t_squared = multiply(complex, &t, &t);
        acc = multiply(complex, &acc, &one_plus(complex, &t_squared));
    }
    acc
}
