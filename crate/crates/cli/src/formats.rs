//! JSON descriptions of algebras, orderings, instances, and reports.

use serde::{Deserialize, Serialize};
use solvable_core::algebra::{CommutationSystem, SolvableAlgebra};
use solvable_core::coeff::FieldSpec;
use solvable_core::cone::{Cone, ConeDecomposition};
use solvable_core::monomial::MultiIndex;
use solvable_core::ordering::MonomialOrdering;
use solvable_core::parse::{parse_poly, poly_to_string};
use solvable_core::poly::Polynomial;
use solvable_core::Error;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum FieldDesc {
    Name(String),
    Prime { prime: u64 },
}

impl FieldDesc {
    pub fn to_spec(&self) -> Result<FieldSpec, String> {
        match self {
            FieldDesc::Name(s) if s == "rational" => Ok(FieldSpec::Rational),
            FieldDesc::Name(s) => Err(format!("unknown field '{s}'")),
            FieldDesc::Prime { prime } => Ok(FieldSpec::Prime(*prime)),
        }
    }

    pub fn from_spec(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rational => FieldDesc::Name("rational".into()),
            FieldSpec::Prime(p) => FieldDesc::Prime { prime: p },
        }
    }
}

/// Ordering literals: "lex", "deglex", {"weight": [...], "tie": "lex"},
/// {"product": [A, B], "split": k}, {"opposite": A}.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum OrderDesc {
    Name(String),
    Weight { weight: Vec<u64>, tie: String },
    Product { product: Vec<OrderDesc>, split: usize },
    Opposite { opposite: Box<OrderDesc> },
}

impl OrderDesc {
    pub fn to_ordering(&self) -> Result<MonomialOrdering, String> {
        match self {
            OrderDesc::Name(s) if s == "lex" => Ok(MonomialOrdering::Lex),
            OrderDesc::Name(s) if s == "deglex" => Ok(MonomialOrdering::DegLex),
            OrderDesc::Name(s) => Err(format!("unknown ordering '{s}'")),
            OrderDesc::Weight { weight, tie } => {
                if tie != "lex" {
                    return Err(format!("unknown tiebreak '{tie}'"));
                }
                if weight.contains(&0) {
                    return Err("weights must be positive".into());
                }
                Ok(MonomialOrdering::WeightThenLex(weight.clone()))
            }
            OrderDesc::Product { product, split } => {
                if product.len() != 2 {
                    return Err("product takes exactly two orderings".into());
                }
                Ok(product[0].to_ordering()?.product(product[1].to_ordering()?, *split))
            }
            OrderDesc::Opposite { opposite } => Ok(opposite.to_ordering()?.opposite()),
        }
    }

    pub fn from_ordering(ord: &MonomialOrdering) -> Self {
        match ord {
            MonomialOrdering::Lex => OrderDesc::Name("lex".into()),
            MonomialOrdering::DegLex => OrderDesc::Name("deglex".into()),
            MonomialOrdering::WeightThenLex(w) => {
                OrderDesc::Weight { weight: w.clone(), tie: "lex".into() }
            }
            MonomialOrdering::Product { left, right, split } => OrderDesc::Product {
                product: vec![Self::from_ordering(left), Self::from_ordering(right)],
                split: *split,
            },
            MonomialOrdering::Opposite(inner) => {
                OrderDesc::Opposite { opposite: Box::new(Self::from_ordering(inner)) }
            }
        }
    }

    /// Parse a CLI `--order` argument: a bare name or a JSON literal.
    pub fn from_cli(arg: &str) -> Result<Self, String> {
        let trimmed = arg.trim();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| format!("bad ordering JSON: {e}"))
        } else {
            Ok(OrderDesc::Name(trimmed.into()))
        }
    }
}

/// One commutation relation x_j x_i = c x_i x_j + p (1-based indices,
/// i < j). Unlisted pairs default to c = 1, p = 0. The polynomial string
/// is read as a PBW normal form.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RelationDesc {
    pub j: usize,
    pub i: usize,
    pub c: String,
    pub p: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDesc {
    pub field: FieldDesc,
    pub vars: Vec<String>,
    pub order: OrderDesc,
    #[serde(default)]
    pub relations: Vec<RelationDesc>,
}

impl AlgebraDesc {
    pub fn build(&self) -> Result<SolvableAlgebra, Error> {
        let field = self.field.to_spec().map_err(|m| Error::Parse { position: 0, message: m })?;
        let ordering =
            self.order.to_ordering().map_err(|m| Error::Parse { position: 0, message: m })?;
        let n = self.vars.len();
        // Relation polynomials are PBW normal forms: read them against a
        // commutative scratch copy of the variables.
        let scratch = SolvableAlgebra::validate(
            self.vars.clone(),
            field,
            MonomialOrdering::Lex,
            CommutationSystem::trivial(n, field),
        )?;
        let mut system = CommutationSystem::trivial(n, field);
        for rel in &self.relations {
            if rel.i >= rel.j || rel.j > n || rel.i == 0 {
                return Err(Error::VarOutOfRange { index: rel.j.max(rel.i), nvars: n });
            }
            let c = field.parse(&rel.c).ok_or(Error::Parse {
                position: 0,
                message: format!("bad coefficient '{}'", rel.c),
            })?;
            let p = if rel.p.trim() == "0" {
                Polynomial::zero()
            } else {
                parse_poly(&scratch, &rel.p)?
            };
            system.set(rel.i - 1, rel.j - 1, c, p);
        }
        SolvableAlgebra::validate(self.vars.clone(), field, ordering, system)
    }

    pub fn from_algebra(alg: &SolvableAlgebra) -> Self {
        let relations = alg
            .system()
            .pairs()
            .filter(|(_, _, rel)| !rel.c.is_one() || !rel.p.is_zero())
            .map(|(i, j, rel)| RelationDesc {
                j: j + 1,
                i: i + 1,
                c: rel.c.to_display(),
                p: poly_to_string(alg, &rel.p),
            })
            .collect();
        AlgebraDesc {
            field: FieldDesc::from_spec(alg.field()),
            vars: alg.names().to_vec(),
            order: OrderDesc::from_ordering(alg.ordering()),
            relations,
        }
    }
}

/// One instance: an algebra plus generator strings and task options.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InstanceFile {
    pub name: String,
    pub algebra: AlgebraDesc,
    pub gens: Vec<String>,
    #[serde(default)]
    pub homogeneous: bool,
    #[serde(default)]
    pub two_sided: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CorpusFile {
    pub seed: u64,
    pub instances: Vec<InstanceFile>,
}

/// {w, y, h} with canonical polynomial strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConeDesc {
    pub w: String,
    pub y: Vec<String>,
    pub h: String,
}

pub fn cone_to_desc(alg: &SolvableAlgebra, cone: &Cone) -> ConeDesc {
    ConeDesc {
        w: poly_to_string(alg, &alg.mono(cone.apex.clone())),
        y: cone.vars.indices().into_iter().map(|i| alg.names()[i].clone()).collect(),
        h: cone
            .factor
            .as_ref()
            .map(|f| poly_to_string(alg, f))
            .unwrap_or_else(|| "1".into()),
    }
}

pub fn decomposition_to_desc(alg: &SolvableAlgebra, dec: &ConeDecomposition) -> Vec<ConeDesc> {
    dec.cones.iter().map(|c| cone_to_desc(alg, c)).collect()
}

/// Parse a monomial string to its exponent vector (single-term check).
pub fn parse_monomial(alg: &SolvableAlgebra, text: &str) -> Result<MultiIndex, Error> {
    let p = parse_poly(alg, text)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c.is_one() => Ok(m.clone()),
        _ => Err(Error::Parse { position: 0, message: format!("'{text}' is not a monomial") }),
    }
}
