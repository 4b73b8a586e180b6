//! Builtin example complexes and the JSON model file format.
//!
//! Builtins: `bigon` (two facets meeting in two vertices), `triangle` and
//! `square` (polygon orbit models, all faces acyclic), `rp2-no-boundary`
//! (no facets, nontrivial mod-2 cohomology on the maximal face) and
//! `connected-sum` (a genus-one-minus-disk maximal face over a triangle
//! boundary, with rank-two degree-one cohomology).
//!
//! File i/o lives here and nowhere else. The canonical serialization is
//! pretty-printed JSON with alphabetically sorted keys and no floating-point
//! literals; scalars are written as exact fraction strings.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraMap, BasisElement, GradedAlgebra};
use crate::charclass::CharClassData;
use crate::corners::{Face, FaceComplex, FaceId, ValidationReport};
use crate::ring::{FacePolynomial, Monomial, RingElement, TorusData};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("unknown builtin model `{0}`")]
    UnknownModel(String),
    #[error("model `{model}` does not support the requested field {field}")]
    UnsupportedField { model: String, field: FieldSpec },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("model failed validation:\n{0}")]
    Validation(ValidationReport),
}

/// A complex together with its optional torus and characteristic-class data.
#[derive(Debug, Clone)]
pub struct Model {
    pub complex: FaceComplex,
    pub torus: Option<TorusData>,
    pub char_data: Option<CharClassData>,
}

// ---------------------------------------------------------------------------
// Builtin models
// ---------------------------------------------------------------------------

/// H*(wedge of two circles): 1 in degree 0, b1 and b2 in degree 1, all
/// positive-degree products zero.
fn wedge_algebra(field: FieldSpec) -> GradedAlgebra {
    let one = field.one();
    GradedAlgebra::new(
        field,
        1,
        vec![
            BasisElement {
                name: "1".into(),
                degree: 0,
            },
            BasisElement {
                name: "b1".into(),
                degree: 1,
            },
            BasisElement {
                name: "b2".into(),
                degree: 1,
            },
        ],
        0,
        [
            (0, 0, vec![(0, one.clone())]),
            (0, 1, vec![(1, one.clone())]),
            (1, 0, vec![(1, one.clone())]),
            (0, 2, vec![(2, one.clone())]),
            (2, 0, vec![(2, one)]),
        ],
    )
    .expect("wedge algebra is well formed")
}

/// H*(RP^2; F_2) = <1, a, a^2>.
fn rp2_algebra(field: FieldSpec) -> GradedAlgebra {
    let one = field.one();
    GradedAlgebra::new(
        field,
        2,
        vec![
            BasisElement {
                name: "1".into(),
                degree: 0,
            },
            BasisElement {
                name: "a".into(),
                degree: 1,
            },
            BasisElement {
                name: "a2".into(),
                degree: 2,
            },
        ],
        0,
        [
            (0, 0, vec![(0, one.clone())]),
            (0, 1, vec![(1, one.clone())]),
            (1, 0, vec![(1, one.clone())]),
            (0, 2, vec![(2, one.clone())]),
            (2, 0, vec![(2, one.clone())]),
            (1, 1, vec![(2, one)]),
        ],
    )
    .expect("projective plane algebra is well formed")
}

/// Restriction onto an acyclic face: identity in degree 0, zero above.
fn map_onto_trivial(source: &GradedAlgebra, target: &GradedAlgebra) -> AlgebraMap {
    let field = source.field();
    let mut matrices = Vec::with_capacity(source.top_degree() + 1);
    matrices.push(vec![vec![field.one()]]);
    for d in 1..=source.top_degree() {
        let rows = target.dim(d);
        matrices.push(vec![vec![field.zero(); source.dim(d)]; rows]);
    }
    AlgebraMap::new(source, target, matrices).expect("shapes match by construction")
}

/// Face poset of an m-gon: the maximal face, m edges labelled {i}, and m
/// vertices labelled {i, i+1 mod m}. For m = 2 the two vertices share the
/// label {1,2}.
fn polygon_faces(m: usize) -> (Vec<Face>, Vec<(FaceId, FaceId)>) {
    let mut faces = vec![Face {
        id: FaceId::new(0),
        codim: 0,
        label: BTreeSet::new(),
    }];
    for i in 1..=m {
        faces.push(Face {
            id: FaceId::new(i),
            codim: 1,
            label: [i].into_iter().collect(),
        });
    }
    let mut covers = Vec::new();
    for i in 1..=m {
        covers.push((FaceId::new(i), FaceId::new(0)));
    }
    for i in 1..=m {
        let next = i % m + 1;
        let id = FaceId::new(m + i);
        faces.push(Face {
            id,
            codim: 2,
            label: [i, next].into_iter().collect(),
        });
        covers.push((id, FaceId::new(i)));
        covers.push((id, FaceId::new(next)));
    }
    (faces, covers)
}

fn acyclic_polygon(field: FieldSpec, m: usize) -> FaceComplex {
    let (faces, covers) = polygon_faces(m);
    let trivial = GradedAlgebra::trivial(field);
    let algebras = vec![trivial.clone(); faces.len()];
    let mut maps = BTreeMap::new();
    for &(sub, sup) in &covers {
        maps.insert((sub.index(), sup.index()), AlgebraMap::identity(&trivial));
    }
    FaceComplex::new(field, m, faces, covers, algebras, maps)
        .expect("polygon model is structurally sound")
}

fn connected_sum_complex(field: FieldSpec) -> FaceComplex {
    let (faces, covers) = polygon_faces(3);
    let q_algebra = wedge_algebra(field);
    let trivial = GradedAlgebra::trivial(field);
    let mut algebras = vec![q_algebra.clone()];
    algebras.extend(std::iter::repeat_n(trivial.clone(), faces.len() - 1));
    let mut maps = BTreeMap::new();
    for &(sub, sup) in &covers {
        let map = if sup.index() == 0 {
            map_onto_trivial(&q_algebra, &trivial)
        } else {
            AlgebraMap::identity(&trivial)
        };
        maps.insert((sub.index(), sup.index()), map);
    }
    FaceComplex::new(field, 3, faces, covers, algebras, maps)
        .expect("connected-sum model is structurally sound")
}

fn boundaryless_complex(field: FieldSpec) -> FaceComplex {
    let faces = vec![Face {
        id: FaceId::new(0),
        codim: 0,
        label: BTreeSet::new(),
    }];
    FaceComplex::new(
        field,
        0,
        faces,
        Vec::new(),
        vec![rp2_algebra(field)],
        BTreeMap::new(),
    )
    .expect("boundaryless model is structurally sound")
}

fn unit_char_data(complex: &FaceComplex) -> CharClassData {
    let unit = complex.algebra(complex.max_face()).unit_element();
    CharClassData::new(complex, unit.clone(), unit).expect("unit classes are total classes")
}

fn zero_structure_matrix(complex: &FaceComplex, n: usize) -> Vec<Vec<Scalar>> {
    let rows = complex.algebra(complex.max_face()).total_dim();
    vec![vec![complex.field().zero(); n]; rows]
}

/// Builds a builtin model, optionally over a non-default field. The acyclic
/// models and the connected sum default to the rationals; the boundaryless
/// projective-plane model only exists over characteristic 2.
pub fn build_builtin(name: &str, field: Option<FieldSpec>) -> Result<Model, ModelError> {
    let rationals = FieldSpec::rationals();
    match name {
        "bigon" | "triangle" | "square" => {
            let field = field.unwrap_or(rationals);
            let m = match name {
                "bigon" => 2,
                "triangle" => 3,
                _ => 4,
            };
            let complex = acyclic_polygon(field, m);
            let weights: Vec<Vec<i64>> = match name {
                "bigon" => vec![vec![1, 0], vec![0, 1]],
                "triangle" => vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
                _ => vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]],
            };
            let c = zero_structure_matrix(&complex, 2);
            let torus =
                TorusData::new(&complex, 2, weights, c).expect("builtin torus data is well shaped");
            let char_data = unit_char_data(&complex);
            Ok(Model {
                complex,
                torus: Some(torus),
                char_data: Some(char_data),
            })
        }
        "connected-sum" => {
            let field = field.unwrap_or(rationals);
            let complex = connected_sum_complex(field);
            let weights = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
            // The structure map sends the two torus coordinates to the two
            // degree-one classes of the maximal face.
            let zero = complex.field().zero();
            let one = complex.field().one();
            let c = vec![
                vec![zero.clone(), zero.clone()],
                vec![one.clone(), zero.clone()],
                vec![zero, one],
            ];
            let torus =
                TorusData::new(&complex, 2, weights, c).expect("builtin torus data is well shaped");
            let char_data = unit_char_data(&complex);
            Ok(Model {
                complex,
                torus: Some(torus),
                char_data: Some(char_data),
            })
        }
        "rp2-no-boundary" => {
            let f2 = FieldSpec::prime(2).expect("2 is prime");
            if let Some(requested) = field {
                if requested != f2 {
                    return Err(ModelError::UnsupportedField {
                        model: name.to_string(),
                        field: requested,
                    });
                }
            }
            let complex = boundaryless_complex(f2);
            let torus = TorusData::new(&complex, 2, Vec::new(), zero_structure_matrix(&complex, 2))
                .expect("builtin torus data is well shaped");
            let alg = complex.algebra(complex.max_face());
            let sw = alg
                .element((0..3).map(|i| (i, f2.one())))
                .expect("total class over the projective plane basis");
            let char_data = CharClassData::new(&complex, sw, alg.unit_element())
                .expect("degree-0 part is the unit");
            Ok(Model {
                complex,
                torus: Some(torus),
                char_data: Some(char_data),
            })
        }
        other => Err(ModelError::UnknownModel(other.to_string())),
    }
}

/// Names accepted by [`build_builtin`].
pub const BUILTIN_NAMES: [&str; 5] = [
    "bigon",
    "triangle",
    "square",
    "rp2-no-boundary",
    "connected-sum",
];

// ---------------------------------------------------------------------------
// Model file format
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct FieldJson {
    characteristic: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct FaceJson {
    id: usize,
    codim: usize,
    label: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CoverJson {
    sub: usize,
    #[serde(rename = "super")]
    sup: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct BasisJson {
    name: String,
    degree: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct ProductJson {
    left: usize,
    right: usize,
    result: Vec<(usize, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraJson {
    face: usize,
    top_degree: usize,
    basis: Vec<BasisJson>,
    unit: usize,
    products: Vec<ProductJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RestrictionJson {
    sub: usize,
    #[serde(rename = "super")]
    sup: usize,
    /// One matrix per degree `0..=top_degree(super)`; rows index the sub
    /// face's basis in that degree, columns the super face's.
    matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TorusJson {
    n: usize,
    v: Vec<Vec<i64>>,
    c: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CharJson {
    /// Coefficients over the maximal face's basis, in basis order.
    sw: Vec<String>,
    pont: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ModelFileJson {
    field: FieldJson,
    m: usize,
    faces: Vec<FaceJson>,
    covers: Vec<CoverJson>,
    algebras: Vec<AlgebraJson>,
    restrictions: Vec<RestrictionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    torus_data: Option<TorusJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    char_data: Option<CharJson>,
}

fn parse_scalar(field: &FieldSpec, text: &str, context: &str) -> Result<Scalar, ModelError> {
    field
        .parse(text)
        .map_err(|e| ModelError::Parse(format!("{context}: {e}")))
}

fn algebra_from_json(field: FieldSpec, json: &AlgebraJson) -> Result<GradedAlgebra, ModelError> {
    let basis = json
        .basis
        .iter()
        .map(|b| BasisElement {
            name: b.name.clone(),
            degree: b.degree,
        })
        .collect();
    let mut products = Vec::new();
    for p in &json.products {
        let mut entries = Vec::new();
        for (k, text) in &p.result {
            let c = parse_scalar(
                &field,
                text,
                &format!(
                    "algebra for face {}, product ({}, {})",
                    json.face, p.left, p.right
                ),
            )?;
            entries.push((*k, c));
        }
        products.push((p.left, p.right, entries));
    }
    GradedAlgebra::new(field, json.top_degree, basis, json.unit, products)
        .map_err(|e| ModelError::Parse(format!("algebra for face {}: {e}", json.face)))
}

fn algebra_to_json(face: usize, alg: &GradedAlgebra) -> AlgebraJson {
    AlgebraJson {
        face,
        top_degree: alg.top_degree(),
        basis: alg
            .basis()
            .iter()
            .map(|b| BasisJson {
                name: b.name.clone(),
                degree: b.degree,
            })
            .collect(),
        unit: alg.unit_index(),
        products: alg
            .products()
            .map(|(left, right, entries)| ProductJson {
                left,
                right,
                result: entries.iter().map(|(k, c)| (*k, c.to_string())).collect(),
            })
            .collect(),
    }
}

fn model_to_json(model: &Model) -> ModelFileJson {
    let complex = &model.complex;
    let q = complex.max_face();
    let q_algebra = complex.algebra(q);
    ModelFileJson {
        field: FieldJson {
            characteristic: complex.field().characteristic(),
        },
        m: complex.m(),
        faces: complex
            .faces()
            .map(|f| FaceJson {
                id: f.id.index(),
                codim: f.codim,
                label: f.label.iter().copied().collect(),
            })
            .collect(),
        covers: complex
            .covers()
            .iter()
            .map(|(sub, sup)| CoverJson {
                sub: sub.index(),
                sup: sup.index(),
            })
            .collect(),
        algebras: complex
            .face_ids()
            .map(|f| algebra_to_json(f.index(), complex.algebra(f)))
            .collect(),
        restrictions: complex
            .covers()
            .iter()
            .map(|(sub, sup)| {
                let map = complex.cover_map(*sub, *sup).expect("cover map present");
                RestrictionJson {
                    sub: sub.index(),
                    sup: sup.index(),
                    matrices: map
                        .matrices()
                        .iter()
                        .map(|m| {
                            m.iter()
                                .map(|row| row.iter().map(|c| c.to_string()).collect())
                                .collect()
                        })
                        .collect(),
                }
            })
            .collect(),
        torus_data: model.torus.as_ref().map(|t| TorusJson {
            n: t.n(),
            v: t.weights().to_vec(),
            c: t.structure_matrix()
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
        }),
        char_data: model.char_data.as_ref().map(|d| {
            let to_list = |class: &crate::algebra::AlgebraElement| -> Vec<String> {
                (0..q_algebra.total_dim())
                    .map(|i| {
                        class
                            .coeff(i)
                            .map(|c| c.to_string())
                            .unwrap_or_else(|| complex.field().zero().to_string())
                    })
                    .collect()
            };
            CharJson {
                sw: to_list(d.sw()),
                pont: to_list(d.pont()),
            }
        }),
    }
}

fn model_from_json(json: &ModelFileJson) -> Result<Model, ModelError> {
    let field = FieldSpec::new(json.field.characteristic)
        .map_err(|e| ModelError::Parse(format!("field: {e}")))?;
    let faces: Vec<Face> = json
        .faces
        .iter()
        .map(|f| Face {
            id: FaceId::new(f.id),
            codim: f.codim,
            label: f.label.iter().copied().collect(),
        })
        .collect();
    let covers: Vec<(FaceId, FaceId)> = json
        .covers
        .iter()
        .map(|c| (FaceId::new(c.sub), FaceId::new(c.sup)))
        .collect();
    let mut algebras_by_face: BTreeMap<usize, GradedAlgebra> = BTreeMap::new();
    for a in &json.algebras {
        if algebras_by_face
            .insert(a.face, algebra_from_json(field, a)?)
            .is_some()
        {
            return Err(ModelError::Parse(format!(
                "duplicate algebra for face {}",
                a.face
            )));
        }
    }
    let mut algebras = Vec::with_capacity(faces.len());
    for f in &faces {
        match algebras_by_face.remove(&f.id.index()) {
            Some(a) => algebras.push(a),
            None => {
                return Err(ModelError::Parse(format!(
                    "missing algebra for face {}",
                    f.id
                )));
            }
        }
    }
    let mut maps = BTreeMap::new();
    for r in &json.restrictions {
        if r.sub >= faces.len() || r.sup >= faces.len() {
            return Err(ModelError::Parse(format!(
                "restriction ({}, {}) refers to an unknown face",
                r.sub, r.sup
            )));
        }
        let mut matrices = Vec::new();
        for (d, m) in r.matrices.iter().enumerate() {
            let mut rows = Vec::new();
            for (ri, row) in m.iter().enumerate() {
                let mut entries = Vec::new();
                for (ci, text) in row.iter().enumerate() {
                    entries.push(parse_scalar(
                        &field,
                        text,
                        &format!(
                            "restriction ({}, {}), degree {d}, entry ({ri}, {ci})",
                            r.sub, r.sup
                        ),
                    )?);
                }
                rows.push(entries);
            }
            matrices.push(rows);
        }
        let map = AlgebraMap::new(&algebras[r.sup], &algebras[r.sub], matrices)
            .map_err(|e| ModelError::Parse(format!("restriction ({}, {}): {e}", r.sub, r.sup)))?;
        if maps.insert((r.sub, r.sup), map).is_some() {
            return Err(ModelError::Parse(format!(
                "duplicate restriction for cover ({}, {})",
                r.sub, r.sup
            )));
        }
    }
    let complex = FaceComplex::new(field, json.m, faces, covers, algebras, maps)
        .map_err(|e| ModelError::Parse(e.to_string()))?;
    let report = complex.validate();
    if !report.is_pass() {
        return Err(ModelError::Validation(report));
    }
    let torus = match &json.torus_data {
        Some(t) => {
            let mut c = Vec::new();
            for (ri, row) in t.c.iter().enumerate() {
                let mut entries = Vec::new();
                for (ci, text) in row.iter().enumerate() {
                    entries.push(parse_scalar(
                        &field,
                        text,
                        &format!("torus data, structure matrix entry ({ri}, {ci})"),
                    )?);
                }
                c.push(entries);
            }
            Some(
                TorusData::new(&complex, t.n, t.v.clone(), c)
                    .map_err(|e| ModelError::Parse(format!("torus data: {e}")))?,
            )
        }
        None => None,
    };
    let char_data = match &json.char_data {
        Some(d) => {
            let q_algebra = complex.algebra(complex.max_face());
            let parse_class = |list: &[String], what: &str| -> Result<_, ModelError> {
                if list.len() != q_algebra.total_dim() {
                    return Err(ModelError::Parse(format!(
                        "{what} class has {} coefficients, the maximal face cohomology has dimension {}",
                        list.len(),
                        q_algebra.total_dim()
                    )));
                }
                let mut pairs = Vec::new();
                for (i, text) in list.iter().enumerate() {
                    pairs.push((
                        i,
                        parse_scalar(&field, text, &format!("{what} class entry {i}"))?,
                    ));
                }
                q_algebra
                    .element(pairs)
                    .map_err(|e| ModelError::Parse(format!("{what} class: {e}")))
            };
            let sw = parse_class(&d.sw, "Stiefel-Whitney")?;
            let pont = parse_class(&d.pont, "Pontrjagin")?;
            Some(
                CharClassData::new(&complex, sw, pont)
                    .map_err(|e| ModelError::Parse(format!("characteristic classes: {e}")))?,
            )
        }
        None => None,
    };
    Ok(Model {
        complex,
        torus,
        char_data,
    })
}

/// Canonical textual form: pretty JSON with sorted keys.
pub fn model_to_string(model: &Model) -> Result<String, ModelError> {
    let json = model_to_json(model);
    let value = serde_json::to_value(&json)?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
}

pub fn model_from_str(text: &str) -> Result<Model, ModelError> {
    let json: ModelFileJson = serde_json::from_str(text)?;
    model_from_json(&json)
}

/// Loads a model file, validating the complex; invalid data is rejected.
pub fn load_model(path: impl AsRef<Path>) -> Result<Model, ModelError> {
    let text = std::fs::read_to_string(path)?;
    model_from_str(&text)
}

/// Writes the canonical serialized form.
pub fn save_model(model: &Model, path: impl AsRef<Path>) -> Result<(), ModelError> {
    std::fs::write(path, model_to_string(model)?)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Ring element files
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    monomial: BTreeMap<String, u32>,
    coeff: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ComponentJson {
    face: usize,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ElementJson {
    components: Vec<ComponentJson>,
}

pub fn element_to_string(complex: &FaceComplex, x: &RingElement) -> Result<String, ModelError> {
    let json = ElementJson {
        components: x
            .components()
            .map(|(f, p)| ComponentJson {
                face: f.index(),
                terms: p
                    .terms()
                    .map(|(m, c)| TermJson {
                        monomial: m.exponents().map(|(i, e)| (i.to_string(), e)).collect(),
                        coeff: c
                            .coeffs()
                            .map(|(i, s)| {
                                (complex.algebra(f).basis()[i].name.clone(), s.to_string())
                            })
                            .collect(),
                    })
                    .collect(),
            })
            .collect(),
    };
    let value = serde_json::to_value(&json)?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
}

pub fn element_from_str(complex: &FaceComplex, text: &str) -> Result<RingElement, ModelError> {
    let json: ElementJson = serde_json::from_str(text)?;
    let field = complex.field();
    let mut polys = Vec::new();
    for comp in &json.components {
        if comp.face >= complex.num_faces() {
            return Err(ModelError::Parse(format!("unknown face id {}", comp.face)));
        }
        let face = FaceId::new(comp.face);
        let alg = complex.algebra(face);
        let mut terms = Vec::new();
        for term in &comp.terms {
            let mut exponents = Vec::new();
            for (k, e) in &term.monomial {
                let i: usize = k
                    .parse()
                    .map_err(|_| ModelError::Parse(format!("bad facet index `{k}` in monomial")))?;
                exponents.push((i, *e));
            }
            let monomial = Monomial::from_exponents(exponents);
            let mut pairs = Vec::new();
            for (name, text) in &term.coeff {
                let index = alg.basis_index_of_name(name).ok_or_else(|| {
                    ModelError::Parse(format!("face {face} has no basis element named `{name}`"))
                })?;
                pairs.push((
                    index,
                    parse_scalar(&field, text, &format!("coefficient of `{name}`"))?,
                ));
            }
            let coeff = alg
                .element(pairs)
                .map_err(|e| ModelError::Parse(format!("coefficient at face {face}: {e}")))?;
            terms.push((monomial, coeff));
        }
        polys.push(
            FacePolynomial::new(complex, face, terms)
                .map_err(|e| ModelError::Parse(e.to_string()))?,
        );
    }
    Ok(RingElement::from_components(polys))
}

pub fn load_element(
    complex: &FaceComplex,
    path: impl AsRef<Path>,
) -> Result<RingElement, ModelError> {
    let text = std::fs::read_to_string(path)?;
    element_from_str(complex, &text)
}

pub fn save_element(
    complex: &FaceComplex,
    x: &RingElement,
    path: impl AsRef<Path>,
) -> Result<(), ModelError> {
    std::fs::write(path, element_to_string(complex, x)?)?;
    Ok(())
}
