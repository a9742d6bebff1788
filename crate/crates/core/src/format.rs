//! The algebra description file format: versioned JSON with a canonical key order and
//! sorted sparse entries, so that serializing a parsed file reproduces it byte for byte.
//!
//! Sparse vectors are lists of `[label, coefficient]` pairs in basis order, with
//! coefficients written as `"3"`, `"-1/2"` (over `q`) or residues (over `gf:p`).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, BasisElement, SuperAlgebra};
use crate::catalog::CatalogEntry;
use crate::error::Error;
use crate::heredity::{AntiInvolution, Cell, HeredityData, Poset};
use crate::linalg::{Degree, Field, Parity};
use crate::truncation::Bigrading;

pub const FORMAT_NAME: &str = "qhalg-algebra";
pub const FORMAT_VERSION: u32 = 1;

type RawVector = Vec<(String, String)>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescription {
    format: String,
    version: u32,
    field: String,
    basis: Vec<RawBasis>,
    products: Vec<RawProduct>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<RawVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    heredity: Option<RawHeredity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    involution: Option<Vec<RawImage>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bigrading: Option<Vec<RawBidegree>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasis {
    label: String,
    degree: i64,
    parity: u8,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    left: String,
    right: String,
    value: RawVector,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHeredity {
    poset: Vec<String>,
    /// Pairs `[smaller, larger]`.
    relations: Vec<(String, String)>,
    cells: Vec<RawCell>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCell {
    label: String,
    initial: usize,
    x: Vec<RawVector>,
    y: Vec<RawVector>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawImage {
    label: String,
    image: RawVector,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBidegree {
    label: String,
    bidegree: (u8, u8),
}

/// Everything a description file can carry. Nothing beyond well-formedness is
/// checked on parsing.
#[derive(Clone, Debug)]
pub struct Description {
    pub algebra: SuperAlgebra,
    pub heredity: Option<HeredityData>,
    pub involution: Option<AntiInvolution>,
    pub bigrading: Option<Bigrading>,
}

impl Description {
    pub fn algebra_only(algebra: SuperAlgebra) -> Self {
        Description {
            algebra,
            heredity: None,
            involution: None,
            bigrading: None,
        }
    }
}

impl From<&CatalogEntry> for Description {
    fn from(entry: &CatalogEntry) -> Self {
        Description {
            algebra: entry.algebra().clone(),
            heredity: Some(entry.heredity().clone()),
            involution: entry.involution.clone(),
            bigrading: entry.bigrading.clone(),
        }
    }
}

pub fn field_descriptor(field: Field) -> String {
    match field {
        Field::Rational => "q".into(),
        Field::Prime(p) => format!("gf:{p}"),
    }
}

fn write_vector(alg: &SuperAlgebra, v: &AlgebraElement) -> RawVector {
    v.terms()
        .map(|(k, c)| (alg.label(k).to_string(), c.to_string()))
        .collect()
}

/// The canonical text of a description, ending in a newline.
pub fn serialize(d: &Description) -> String {
    let alg = &d.algebra;
    let raw = RawDescription {
        format: FORMAT_NAME.into(),
        version: FORMAT_VERSION,
        field: field_descriptor(alg.field()),
        basis: alg
            .basis()
            .iter()
            .map(|b| RawBasis {
                label: b.label.clone(),
                degree: b.degree.q,
                parity: b.degree.parity.bit(),
            })
            .collect(),
        products: alg
            .products()
            .map(|((i, j), v)| RawProduct {
                left: alg.label(i).to_string(),
                right: alg.label(j).to_string(),
                value: write_vector(alg, v),
            })
            .collect(),
        unit: alg.unit().map(|u| write_vector(alg, u)),
        heredity: d.heredity.as_ref().map(|h| {
            let poset = h.poset();
            RawHeredity {
                poset: poset.labels().to_vec(),
                relations: poset
                    .relations()
                    .iter()
                    .map(|&(a, b)| (poset.label(a).to_string(), poset.label(b).to_string()))
                    .collect(),
                cells: h
                    .cells()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| RawCell {
                        label: poset.label(i).to_string(),
                        initial: c.initial,
                        x: c.x.iter().map(|v| write_vector(alg, v)).collect(),
                        y: c.y.iter().map(|v| write_vector(alg, v)).collect(),
                    })
                    .collect(),
            }
        }),
        involution: d.involution.as_ref().map(|t| {
            t.images
                .iter()
                .enumerate()
                .map(|(k, v)| RawImage {
                    label: alg.label(k).to_string(),
                    image: write_vector(alg, v),
                })
                .collect()
        }),
        bigrading: d.bigrading.as_ref().map(|g| {
            g.degrees
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| RawBidegree {
                    label: alg.label(k).to_string(),
                    bidegree: (a.bit(), b.bit()),
                })
                .collect()
        }),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("plain data serializes");
    s.push('\n');
    s
}

fn parity(bit: u8, what: &str) -> Result<Parity, Error> {
    match bit {
        0 => Ok(Parity::Even),
        1 => Ok(Parity::Odd),
        _ => Err(Error::Parse(format!("parity of {what} must be 0 or 1, got {bit}"))),
    }
}

fn read_vector(field: Field, labels: &[String], raw: &RawVector) -> Result<AlgebraElement, Error> {
    let mut v = AlgebraElement::zero();
    for (label, coeff) in raw {
        let k = labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        v.add_term(k, &field.parse_scalar(coeff)?);
    }
    Ok(v)
}

/// Parses a description; malformed structure, unknown labels and bad coefficients are
/// errors, axiom failures are left to the verifiers.
pub fn parse(text: &str) -> Result<Description, Error> {
    let raw: RawDescription =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if raw.format != FORMAT_NAME {
        return Err(Error::Parse(format!("unknown format {:?}", raw.format)));
    }
    if raw.version != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported version {}", raw.version)));
    }
    let field: Field = raw.field.parse()?;
    let labels: Vec<String> = raw.basis.iter().map(|b| b.label.clone()).collect();
    let basis = raw
        .basis
        .iter()
        .map(|b| Ok(BasisElement::new(b.label.clone(), Degree::new(b.degree, parity(b.parity, &b.label)?))))
        .collect::<Result<Vec<_>, Error>>()?;
    let index = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::UnknownLabel(l.to_string()))
    };
    let mut seen = HashSet::new();
    let mut products = Vec::with_capacity(raw.products.len());
    for p in &raw.products {
        let key = (index(&p.left)?, index(&p.right)?);
        if !seen.insert(key) {
            return Err(Error::Parse(format!("duplicate product {} * {}", p.left, p.right)));
        }
        products.push((key, read_vector(field, &labels, &p.value)?));
    }
    let unit = raw
        .unit
        .as_ref()
        .map(|u| read_vector(field, &labels, u))
        .transpose()?;
    let algebra = SuperAlgebra::new(field, basis, products, unit)?;

    let heredity = match &raw.heredity {
        None => None,
        Some(h) => {
            let pos = |l: &str| {
                h.poset
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::MalformedHeredity(format!("unknown poset label {l:?}")))
            };
            let relations = h
                .relations
                .iter()
                .map(|(a, b)| Ok((pos(a)?, pos(b)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let poset = Poset::new(h.poset.clone(), relations)?;
            if h.cells.len() != h.poset.len() {
                return Err(Error::MalformedHeredity(format!(
                    "{} cells for {} poset elements",
                    h.cells.len(),
                    h.poset.len()
                )));
            }
            let mut cells = Vec::with_capacity(h.cells.len());
            for (i, c) in h.cells.iter().enumerate() {
                if c.label != h.poset[i] {
                    return Err(Error::MalformedHeredity(format!(
                        "cell {i} is labelled {:?}, expected {:?}",
                        c.label, h.poset[i]
                    )));
                }
                let read = |list: &[RawVector]| {
                    list.iter()
                        .map(|v| read_vector(field, &labels, v))
                        .collect::<Result<Vec<_>, Error>>()
                };
                cells.push(Cell::new(read(&c.x)?, read(&c.y)?, c.initial));
            }
            Some(HeredityData::new(poset, cells)?)
        }
    };

    let involution = match &raw.involution {
        None => None,
        Some(list) => {
            if list.len() != labels.len() || list.iter().zip(&labels).any(|(r, l)| r.label != *l) {
                return Err(Error::Parse(
                    "involution must list every basis label once, in basis order".into(),
                ));
            }
            Some(AntiInvolution::new(
                list.iter()
                    .map(|r| read_vector(field, &labels, &r.image))
                    .collect::<Result<_, _>>()?,
            ))
        }
    };

    let bigrading = match &raw.bigrading {
        None => None,
        Some(list) => {
            if list.len() != labels.len() || list.iter().zip(&labels).any(|(r, l)| r.label != *l) {
                return Err(Error::Parse(
                    "bigrading must list every basis label once, in basis order".into(),
                ));
            }
            Some(Bigrading::new(
                list.iter()
                    .map(|r| Ok((parity(r.bidegree.0, &r.label)?, parity(r.bidegree.1, &r.label)?)))
                    .collect::<Result<_, Error>>()?,
            ))
        }
    };

    Ok(Description {
        algebra,
        heredity,
        involution,
        bigrading,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{direct_sum, extended_zigzag, matrix_superalgebra};

    fn catalog() -> Vec<CatalogEntry> {
        let mut out = Vec::new();
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            for l in 1..=4 {
                out.push(extended_zigzag(l, field).unwrap());
            }
            for (n, m) in [(1, 0), (1, 1), (2, 1), (1, 2)] {
                out.push(matrix_superalgebra(n, m, field).unwrap());
            }
        }
        out.push(
            direct_sum(
                &extended_zigzag(1, Field::Rational).unwrap(),
                &matrix_superalgebra(1, 1, Field::Rational).unwrap(),
            )
            .unwrap(),
        );
        out
    }

    #[test]
    fn round_trip_is_byte_identical() {
        for entry in catalog() {
            let text = serialize(&Description::from(&entry));
            let parsed = parse(&text).unwrap();
            assert_eq!(serialize(&parsed), text);
            assert!(parsed.algebra.same_structure(entry.algebra()));
            assert_eq!(parsed.heredity.as_ref(), Some(entry.heredity()));
            assert_eq!(parsed.involution, entry.involution);
            assert_eq!(parsed.bigrading, entry.bigrading);
        }
    }

    #[test]
    fn non_integer_coefficients_survive() {
        let z = extended_zigzag(1, Field::Rational).unwrap();
        let text = serialize(&Description::from(&z)).replace(
            "\"value\": [\n        [\n          \"c0\",\n          \"1\"",
            "\"value\": [\n        [\n          \"c0\",\n          \"-3/4\"",
        );
        let d = parse(&text).unwrap();
        assert_eq!(serialize(&d), text);
        assert_ne!(text, serialize(&Description::from(&z)));
    }

    #[test]
    fn rejects_malformed() {
        let z = extended_zigzag(1, Field::Rational).unwrap();
        let good = serialize(&Description::from(&z));
        for (from, to) in [
            ("\"version\": 1", "\"version\": 2"),
            ("\"field\": \"q\"", "\"field\": \"gf:4\""),
            ("\"label\": \"c0\"", "\"label\": \"c0 \""),
            ("\"left\": \"a0_1\"", "\"left\": \"zz\""),
            ("\"parity\": 1", "\"parity\": 7"),
            ("\"format\": \"qhalg-algebra\"", "\"format\": \"other\""),
        ] {
            assert!(good.contains(from), "{from}");
            assert!(parse(&good.replacen(from, to, 1)).is_err(), "{to}");
        }
        assert!(parse("{").is_err());
        assert!(parse("").is_err());
    }
}
