//! Seeded deterministic generators of random ring elements, used by the
//! property and acceptance suites. Coefficients are drawn from small
//! integers (or residues), monomial exponents are at most 3, so sampled
//! degrees stay desk-scale.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, GradedAlgebra};
use crate::corners::{FaceComplex, FaceId};
use crate::ring::{linear_combine, make_face_element, FacePolynomial, Monomial, RingElement};
use crate::scalar::Scalar;

pub struct Sampler<'a> {
    complex: &'a FaceComplex,
    rng: ChaCha8Rng,
}

impl<'a> Sampler<'a> {
    pub fn new(complex: &'a FaceComplex, seed: u64) -> Self {
        Sampler {
            complex,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        let field = self.complex.field();
        match field.characteristic() {
            0 => field.from_integer(self.rng.gen_range(-2..=2)),
            p => {
                let bound = p.min(5) as i64;
                field.from_integer(self.rng.gen_range(0..bound))
            }
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn face(&mut self) -> FaceId {
        FaceId::new(self.rng.gen_range(0..self.complex.num_faces()))
    }

    fn nonzero_algebra_element(&mut self, alg: &GradedAlgebra) -> AlgebraElement {
        loop {
            let pairs: Vec<(usize, Scalar)> =
                (0..alg.total_dim()).map(|i| (i, self.scalar())).collect();
            let x = alg.element(pairs).expect("indices are in range");
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A nonzero polynomial at `face` whose every monomial uses the whole
    /// face label with exponents between 1 and 3.
    pub fn strict_polynomial(&mut self, face: FaceId) -> FacePolynomial {
        let label: Vec<usize> = self.complex.label(face).iter().copied().collect();
        let alg = self.complex.algebra(face);
        loop {
            let terms: Vec<(Monomial, AlgebraElement)> = (0..self.rng.gen_range(1..=3))
                .map(|_| {
                    let monomial = Monomial::from_exponents(
                        label.iter().map(|i| (*i, self.rng.gen_range(1..=3u32))),
                    );
                    (monomial, self.nonzero_algebra_element(alg))
                })
                .collect();
            let poly = FacePolynomial::new(self.complex, face, terms)
                .expect("sampled monomials are supported on the face label");
            if !poly.is_zero() {
                return poly;
            }
        }
    }

    /// A random face element together with the face it lives at.
    pub fn face_element(&mut self) -> (FaceId, RingElement) {
        let face = self.face();
        let poly = self.strict_polynomial(face);
        let element = make_face_element(self.complex, face, &poly)
            .expect("sampled polynomials use the whole face label");
        (face, element)
    }

    /// A homogeneous face element and its total degree: one monomial, one
    /// basis coefficient.
    pub fn homogeneous_face_element(&mut self) -> (usize, RingElement) {
        let face = self.face();
        let alg = self.complex.algebra(face);
        let label: Vec<usize> = self.complex.label(face).iter().copied().collect();
        let monomial =
            Monomial::from_exponents(label.iter().map(|i| (*i, self.rng.gen_range(1..=3u32))));
        let basis_index = self.rng.gen_range(0..alg.total_dim());
        let coeff = alg.scale(&self.nonzero_scalar(), &alg.basis_element(basis_index));
        let degree = alg.degree_of(basis_index) + monomial.degree();
        let poly = FacePolynomial::term(self.complex, face, monomial, coeff)
            .expect("sampled monomial is supported on the face label");
        let element = make_face_element(self.complex, face, &poly)
            .expect("sampled monomial uses the whole face label");
        (degree, element)
    }

    /// A random member of the face ring: a scalar combination of up to
    /// `max_parts` face elements.
    pub fn member(&mut self, max_parts: usize) -> RingElement {
        let parts = self.rng.gen_range(1..=max_parts.max(1));
        let terms: Vec<(Scalar, RingElement)> = (0..parts)
            .map(|_| (self.nonzero_scalar(), self.face_element().1))
            .collect();
        linear_combine(self.complex, &terms)
    }

    /// A single raw component at a random face, with arbitrary sublabel
    /// support: the typical non-member probe.
    pub fn raw_component(&mut self) -> RingElement {
        let face = self.face();
        let alg = self.complex.algebra(face);
        let label: Vec<usize> = self.complex.label(face).iter().copied().collect();
        let monomial =
            Monomial::from_exponents(label.iter().map(|i| (*i, self.rng.gen_range(0..=2u32))));
        let coeff = self.nonzero_algebra_element(alg);
        let poly = FacePolynomial::term(self.complex, face, monomial, coeff)
            .expect("sampled monomial is supported on the face label");
        RingElement::from_components([poly])
    }
}
