//! Finite-dimensional graded-commutative algebras presented by a named basis
//! and a supplied structure-constant table, plus degree-preserving
//! homomorphisms given by per-degree matrices.
//!
//! The table is taken as given input data; [`GradedAlgebra::validate`] is the
//! gatekeeper that checks the unit law, degree additivity, graded
//! commutativity and associativity. Products whose total degree exceeds
//! `top_degree` truncate to zero.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("basis index {index} out of range (algebra has {len} basis elements)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("element has a component in degree {degree} which the map does not define")]
    DegreeMismatch { degree: usize },
    #[error("malformed algebra presentation: {0}")]
    Shape(String),
}

/// A named basis element together with its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: usize,
}

/// An element as a sparse coefficient vector over the global basis.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, index: usize) -> Option<&Scalar> {
        self.coeffs.get(&index)
    }
}

/// Laws checked by [`GradedAlgebra::validate`] and
/// [`AlgebraMap::check_homomorphism`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraLaw {
    Unit,
    DegreeAdditivity,
    GradedCommutativity,
    Associativity,
    MapUnit,
    MapMultiplicative,
}

impl fmt::Display for AlgebraLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AlgebraLaw::Unit => "unit law",
            AlgebraLaw::DegreeAdditivity => "degree additivity",
            AlgebraLaw::GradedCommutativity => "graded commutativity",
            AlgebraLaw::Associativity => "associativity",
            AlgebraLaw::MapUnit => "map preserves unit",
            AlgebraLaw::MapMultiplicative => "map multiplicativity",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraViolation {
    pub law: AlgebraLaw,
    pub witness: String,
}

/// Outcome of a validation pass: empty means all laws hold.
#[derive(Debug, Clone, Default)]
pub struct AlgebraReport {
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, law: AlgebraLaw, witness: String) {
        self.violations.push(AlgebraViolation { law, witness });
    }
}

/// A finite-dimensional graded algebra over an exact field.
///
/// The basis is ordered by degree; `products` maps a pair of global basis
/// indices to the sparse expansion of their product. Pairs absent from the
/// table multiply to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedAlgebra {
    field: FieldSpec,
    top_degree: usize,
    basis: Vec<BasisElement>,
    /// `offsets[d]..offsets[d + 1]` are the global indices of degree `d`.
    offsets: Vec<usize>,
    unit: usize,
    products: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

impl GradedAlgebra {
    /// Builds an algebra from a degree-sorted basis, the global index of the
    /// unit, and a structure-constant table over global indices.
    pub fn new(
        field: FieldSpec,
        top_degree: usize,
        basis: Vec<BasisElement>,
        unit: usize,
        products: impl IntoIterator<Item = (usize, usize, Vec<(usize, Scalar)>)>,
    ) -> Result<Self, AlgebraError> {
        let len = basis.len();
        for pair in basis.windows(2) {
            if pair[0].degree > pair[1].degree {
                return Err(AlgebraError::Shape(
                    "basis must be listed in ascending degree order".into(),
                ));
            }
        }
        if let Some(b) = basis.iter().find(|b| b.degree > top_degree) {
            return Err(AlgebraError::Shape(format!(
                "basis element `{}` has degree {} above top degree {}",
                b.name, b.degree, top_degree
            )));
        }
        if unit >= len {
            return Err(AlgebraError::IndexOutOfRange { index: unit, len });
        }
        let mut offsets = vec![0usize; top_degree + 2];
        for b in &basis {
            offsets[b.degree + 1] += 1;
        }
        for d in 0..=top_degree {
            offsets[d + 1] += offsets[d];
        }
        let mut table = BTreeMap::new();
        for (i, j, entries) in products {
            for index in [i, j].into_iter().chain(entries.iter().map(|(k, _)| *k)) {
                if index >= len {
                    return Err(AlgebraError::IndexOutOfRange { index, len });
                }
            }
            let pruned: Vec<(usize, Scalar)> =
                entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if table.insert((i, j), pruned).is_some() {
                return Err(AlgebraError::Shape(format!(
                    "duplicate structure-constant entry for pair ({i}, {j})"
                )));
            }
        }
        Ok(GradedAlgebra {
            field,
            top_degree,
            basis,
            offsets,
            unit,
            products: table,
        })
    }

    /// The one-dimensional algebra spanned by its unit.
    pub fn trivial(field: FieldSpec) -> Self {
        GradedAlgebra::new(
            field,
            0,
            vec![BasisElement {
                name: "1".into(),
                degree: 0,
            }],
            0,
            [(0, 0, vec![(0, field.one())])],
        )
        .expect("trivial algebra is well formed")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn products(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Scalar)])> {
        self.products
            .iter()
            .map(|((i, j), v)| (*i, *j, v.as_slice()))
    }

    pub fn degree_of(&self, index: usize) -> usize {
        self.basis[index].degree
    }

    pub fn dim(&self, degree: usize) -> usize {
        if degree > self.top_degree {
            0
        } else {
            self.offsets[degree + 1] - self.offsets[degree]
        }
    }

    pub fn total_dim(&self) -> usize {
        self.basis.len()
    }

    /// Global indices of the degree-`d` basis.
    pub fn degree_range(&self, degree: usize) -> std::ops::Range<usize> {
        if degree > self.top_degree {
            0..0
        } else {
            self.offsets[degree]..self.offsets[degree + 1]
        }
    }

    pub fn basis_index_of_name(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn unit_element(&self) -> AlgebraElement {
        self.basis_element(self.unit)
    }

    pub fn basis_element(&self, index: usize) -> AlgebraElement {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, self.field.one());
        AlgebraElement { coeffs }
    }

    /// Builds an element from (global index, coefficient) pairs, pruning
    /// zeros and summing repeated indices.
    pub fn element(
        &self,
        pairs: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut coeffs: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (index, c) in pairs {
            if index >= self.basis.len() {
                return Err(AlgebraError::IndexOutOfRange {
                    index,
                    len: self.basis.len(),
                });
            }
            let entry = coeffs.entry(index).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, &c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement { coeffs })
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut coeffs = x.coeffs.clone();
        for (i, c) in &y.coeffs {
            let entry = coeffs.entry(*i).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        AlgebraElement { coeffs }
    }

    pub fn neg(&self, x: &AlgebraElement) -> AlgebraElement {
        self.scale(&self.field.from_integer(-1), x)
    }

    pub fn scale(&self, s: &Scalar, x: &AlgebraElement) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        let coeffs = x
            .coeffs
            .iter()
            .map(|(i, c)| (*i, self.field.mul(s, c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        AlgebraElement { coeffs }
    }

    /// Bilinear extension of the structure-constant table; degrees above
    /// `top_degree` truncate to zero.
    pub fn mul(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        let len = self.basis.len();
        let mut coeffs: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, a) in &x.coeffs {
            if *i >= len {
                return Err(AlgebraError::IndexOutOfRange { index: *i, len });
            }
            for (j, b) in &y.coeffs {
                if *j >= len {
                    return Err(AlgebraError::IndexOutOfRange { index: *j, len });
                }
                if self.degree_of(*i) + self.degree_of(*j) > self.top_degree {
                    continue;
                }
                let Some(entries) = self.products.get(&(*i, *j)) else {
                    continue;
                };
                let ab = self.field.mul(a, b);
                for (k, c) in entries {
                    let entry = coeffs.entry(*k).or_insert_with(|| self.field.zero());
                    *entry = self.field.add(entry, &self.field.mul(&ab, c));
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement { coeffs })
    }

    /// The degree-`d` part of `x`.
    pub fn degree_component(&self, x: &AlgebraElement, degree: usize) -> AlgebraElement {
        let coeffs = x
            .coeffs
            .iter()
            .filter(|(i, _)| self.degree_of(**i) == degree)
            .map(|(i, c)| (*i, c.clone()))
            .collect();
        AlgebraElement { coeffs }
    }

    /// Degrees in which `x` has a nonzero component.
    pub fn degrees(&self, x: &AlgebraElement) -> Vec<usize> {
        let mut out: Vec<usize> = x.coeffs.keys().map(|i| self.degree_of(*i)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Raw table entry as an element; used by the validator.
    fn table_product(&self, i: usize, j: usize) -> AlgebraElement {
        let mut coeffs = BTreeMap::new();
        if let Some(entries) = self.products.get(&(i, j)) {
            for (k, c) in entries {
                coeffs.insert(*k, c.clone());
            }
        }
        AlgebraElement { coeffs }
    }

    /// Checks the unit law, degree additivity, graded commutativity and
    /// associativity on all basis elements, reporting witnessing indices.
    pub fn validate(&self) -> AlgebraReport {
        let mut report = AlgebraReport::default();
        if self.degree_of(self.unit) != 0 {
            report.push(
                AlgebraLaw::Unit,
                format!("unit basis element {} has nonzero degree", self.unit),
            );
        }
        for j in 0..self.basis.len() {
            let b = self.basis_element(j);
            if self.table_product(self.unit, j) != b || self.table_product(j, self.unit) != b {
                report.push(
                    AlgebraLaw::Unit,
                    format!("unit * b{j} or b{j} * unit differs from b{j}"),
                );
            }
        }
        for ((i, j), entries) in &self.products {
            let total = self.degree_of(*i) + self.degree_of(*j);
            for (k, _) in entries {
                if total > self.top_degree || self.degree_of(*k) != total {
                    report.push(
                        AlgebraLaw::DegreeAdditivity,
                        format!(
                            "b{i} * b{j} (degree {total}) has a component at b{k} (degree {})",
                            self.degree_of(*k)
                        ),
                    );
                }
            }
        }
        for i in 0..self.basis.len() {
            for j in i..self.basis.len() {
                let di = self.degree_of(i);
                let dj = self.degree_of(j);
                if di + dj > self.top_degree {
                    continue;
                }
                let forward = self.table_product(i, j);
                let backward = self.table_product(j, i);
                let sign = self.field.sign(di * dj);
                if forward != self.scale(&sign, &backward) {
                    report.push(
                        AlgebraLaw::GradedCommutativity,
                        format!("b{i} * b{j} != (-1)^({di}*{dj}) b{j} * b{i}"),
                    );
                }
            }
        }
        for i in 0..self.basis.len() {
            for j in 0..self.basis.len() {
                for k in 0..self.basis.len() {
                    if self.degree_of(i) + self.degree_of(j) + self.degree_of(k) > self.top_degree {
                        continue;
                    }
                    let bi = self.basis_element(i);
                    let bj = self.basis_element(j);
                    let bk = self.basis_element(k);
                    let left = self.mul(&self.mul(&bi, &bj).unwrap(), &bk).unwrap();
                    let right = self.mul(&bi, &self.mul(&bj, &bk).unwrap()).unwrap();
                    if left != right {
                        report.push(
                            AlgebraLaw::Associativity,
                            format!("(b{i} * b{j}) * b{k} != b{i} * (b{j} * b{k})"),
                        );
                    }
                }
            }
        }
        report
    }

    /// Renders an element over the named basis, e.g. `1 + 2*a2`.
    pub fn format_element(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.coeffs
            .iter()
            .map(|(i, c)| {
                let name = &self.basis[*i].name;
                if c.is_one() {
                    name.clone()
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A degree-preserving linear map between graded algebras, stored as one
/// matrix per degree: `matrices[d]` has one row per target basis element of
/// degree `d` and one column per source basis element of degree `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraMap {
    matrices: Vec<Vec<Vec<Scalar>>>,
}

impl AlgebraMap {
    pub fn new(
        source: &GradedAlgebra,
        target: &GradedAlgebra,
        matrices: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, AlgebraError> {
        if matrices.len() != source.top_degree() + 1 {
            return Err(AlgebraError::Shape(format!(
                "expected {} per-degree matrices, got {}",
                source.top_degree() + 1,
                matrices.len()
            )));
        }
        for (d, m) in matrices.iter().enumerate() {
            if m.len() != target.dim(d) {
                return Err(AlgebraError::Shape(format!(
                    "degree-{d} matrix has {} rows, target has dimension {}",
                    m.len(),
                    target.dim(d)
                )));
            }
            for row in m {
                if row.len() != source.dim(d) {
                    return Err(AlgebraError::Shape(format!(
                        "degree-{d} matrix row has {} entries, source has dimension {}",
                        row.len(),
                        source.dim(d)
                    )));
                }
            }
        }
        Ok(AlgebraMap { matrices })
    }

    pub fn identity(alg: &GradedAlgebra) -> Self {
        let field = alg.field();
        let matrices = (0..=alg.top_degree())
            .map(|d| {
                let n = alg.dim(d);
                (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|c| if r == c { field.one() } else { field.zero() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        AlgebraMap { matrices }
    }

    pub fn matrices(&self) -> &[Vec<Vec<Scalar>>] {
        &self.matrices
    }

    /// Matrix application per degree.
    pub fn apply(
        &self,
        source: &GradedAlgebra,
        target: &GradedAlgebra,
        x: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        let field = source.field();
        let mut pairs: Vec<(usize, Scalar)> = Vec::new();
        for (i, c) in x.coeffs() {
            let d = source.degree_of(i);
            if d >= self.matrices.len() {
                return Err(AlgebraError::DegreeMismatch { degree: d });
            }
            let col = i - source.degree_range(d).start;
            let target_start = target.degree_range(d).start;
            for (r, row) in self.matrices[d].iter().enumerate() {
                let entry = field.mul(c, &row[col]);
                if !entry.is_zero() {
                    pairs.push((target_start + r, entry));
                }
            }
        }
        target.element(pairs)
    }

    /// Verifies that the map sends unit to unit and is multiplicative on all
    /// basis pairs within degree bounds.
    pub fn check_homomorphism(
        &self,
        source: &GradedAlgebra,
        target: &GradedAlgebra,
    ) -> AlgebraReport {
        let mut report = AlgebraReport::default();
        match self.apply(source, target, &source.unit_element()) {
            Ok(u) if u == target.unit_element() => {}
            _ => report.push(AlgebraLaw::MapUnit, "unit does not map to unit".into()),
        }
        for i in 0..source.total_dim() {
            for j in 0..source.total_dim() {
                if source.degree_of(i) + source.degree_of(j) > source.top_degree() {
                    continue;
                }
                let bi = source.basis_element(i);
                let bj = source.basis_element(j);
                let product = source.mul(&bi, &bj).unwrap();
                let lhs = self.apply(source, target, &product);
                let fi = self.apply(source, target, &bi);
                let fj = self.apply(source, target, &bj);
                let rhs = match (&fi, &fj) {
                    (Ok(a), Ok(b)) => target.mul(a, b),
                    _ => continue,
                };
                if lhs.ok() != rhs.ok() {
                    report.push(
                        AlgebraLaw::MapMultiplicative,
                        format!("f(b{i} * b{j}) != f(b{i}) * f(b{j})"),
                    );
                }
            }
        }
        report
    }
}
