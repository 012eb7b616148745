//! Checkable evidence that a graph is not well-covered, the witness
//! constructions for products of triangle-free factors, and the clique
//! family whose products with bounded-degree graphs stay well-covered.

mod family;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};
use crate::independence::IndependenceError;

pub use family::{build_clique_family, family_product_assignment, FamilySpec, SpecCondition};
pub use witness::{
    witness_prism_girth5_isolatable, witness_prism_girth5_isolatable_traced,
    witness_product_isolatable_deg2, witness_product_leaf, witness_product_order3, PrismCase,
};

/// Which factor of a product a hypothesis refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Factor {
    G,
    H,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Factor::G => "G",
            Factor::H => "H",
        })
    }
}

/// A failed hypothesis of a witness construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Hypothesis {
    NotConnected(Factor),
    OrderTooSmall { factor: Factor, min: usize },
    GirthTooSmall { factor: Factor, min: usize },
    NoIsolatableVertex,
    NotIsolatable(usize),
    DegreeTooSmall { factor: Factor, vertex: usize, min: usize },
    NoLeaf,
    NotALeaf(usize),
    IsolatableVertexPresent(Factor),
    NotAdjacent(usize, usize),
    UseLeafRoute,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::NotConnected(x) => write!(f, "NotConnected({x})"),
            Hypothesis::OrderTooSmall { factor, min } => {
                write!(f, "OrderTooSmall({factor} needs at least {min} vertices)")
            }
            Hypothesis::GirthTooSmall { factor, min } => {
                write!(f, "GirthTooSmall({factor} needs girth at least {min})")
            }
            Hypothesis::NoIsolatableVertex => write!(f, "NoIsolatableVertex"),
            Hypothesis::NotIsolatable(v) => write!(f, "NotIsolatable({v})"),
            Hypothesis::DegreeTooSmall { factor, vertex, min } => {
                write!(f, "DegreeTooSmall(vertex {vertex} of {factor} needs degree at least {min})")
            }
            Hypothesis::NoLeaf => write!(f, "NoLeaf"),
            Hypothesis::NotALeaf(v) => write!(f, "NotALeaf({v})"),
            Hypothesis::IsolatableVertexPresent(x) => write!(f, "IsolatableVertexPresent({x})"),
            Hypothesis::NotAdjacent(u, v) => write!(f, "NotAdjacent({u},{v})"),
            Hypothesis::UseLeafRoute => write!(
                f,
                "UseLeafRoute(minimum degree 1: use the leaf construction instead)"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("VertexOutOfRange: vertex {vertex} is not below the order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(Hypothesis),
    #[error("ProofInvariantBroken: {0}")]
    ProofInvariantBroken(String),
    #[error("SpecViolation: {0}")]
    SpecViolation(SpecCondition),
    #[error("DegreeTooLarge: partner maximum degree {max_degree} exceeds k = {k}")]
    DegreeTooLarge { max_degree: usize, k: usize },
    #[error(transparent)]
    Independence(#[from] IndependenceError),
    #[error(transparent)]
    Graph(GraphError),
}

impl From<GraphError> for CertificateError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::VertexOutOfRange { vertex, order } => {
                CertificateError::VertexOutOfRange { vertex, order }
            }
            other => CertificateError::Graph(other),
        }
    }
}

/// Evidence that a graph is not well-covered.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// After deleting `N[J]`, `support` is adjacent to two leaves.
    StrongSupport {
        independent: VertexSet,
        support: usize,
        leaves: [usize; 2],
    },
    /// Two maximal independent sets of different sizes.
    UnequalMaximalSets { first: VertexSet, second: VertexSet },
}

impl Certificate {
    /// Leaves are stored in ascending order.
    pub fn strong_support(independent: VertexSet, support: usize, l1: usize, l2: usize) -> Self {
        Certificate::StrongSupport {
            independent,
            support,
            leaves: [l1.min(l2), l1.max(l2)],
        }
    }

    fn vertices(&self) -> VertexSet {
        match self {
            Certificate::StrongSupport {
                independent,
                support,
                leaves,
            } => {
                let mut s = *independent;
                s.insert(*support);
                s.extend(leaves.iter().copied());
                s
            }
            Certificate::UnequalMaximalSets { first, second } => first.union(second),
        }
    }
}

/// Checks the certificate's defining conditions against `g` exactly.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> Result<bool, CertificateError> {
    g.check_set(&c.vertices())?;
    Ok(match c {
        Certificate::StrongSupport {
            independent,
            support,
            leaves: [l1, l2],
        } => {
            if !g.is_independent(independent) || l1 == l2 || support == l1 || support == l2 {
                return Ok(false);
            }
            let rest = g.undominated(independent);
            let expected = VertexSet::singleton(*support);
            [*support, *l1, *l2].iter().all(|&v| rest.contains(v))
                && [*l1, *l2]
                    .iter()
                    .all(|&l| g.neighbors(l).intersection(&rest) == expected)
        }
        Certificate::UnequalMaximalSets { first, second } => {
            first.len() != second.len()
                && g.is_maximal_independent(first)
                && g.is_maximal_independent(second)
        }
    })
}

/// `strong-support J={2,5} s=0 l1=1 l2=4` or
/// `unequal-maximal-sets M1={0,2} M2={1}`.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::StrongSupport {
                independent,
                support,
                leaves: [l1, l2],
            } => write!(f, "strong-support J={independent} s={support} l1={l1} l2={l2}"),
            Certificate::UnequalMaximalSets { first, second } => {
                write!(f, "unequal-maximal-sets M1={first} M2={second}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed certificate: {0}")]
pub struct ParseCertificateError(String);

fn parse_set(text: &str) -> Result<VertexSet, ParseCertificateError> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| ParseCertificateError(format!("expected {{...}}, found `{text}`")))?;
    if inner.is_empty() {
        return Ok(VertexSet::new());
    }
    inner
        .split(',')
        .map(|v| {
            v.parse::<usize>()
                .ok()
                .filter(|&v| v < crate::MAX_ORDER)
                .ok_or_else(|| ParseCertificateError(format!("bad vertex `{v}`")))
        })
        .collect()
}

impl FromStr for Certificate {
    type Err = ParseCertificateError;

    fn from_str(s: &str) -> Result<Self, ParseCertificateError> {
        let mut parts = s.split_whitespace();
        let kind = parts.next().unwrap_or_default();
        let fields: Vec<(&str, &str)> = parts
            .map(|p| {
                p.split_once('=')
                    .ok_or_else(|| ParseCertificateError(format!("expected key=value, found `{p}`")))
            })
            .collect::<Result<_, _>>()?;
        let get = |key: &str| {
            fields
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| ParseCertificateError(format!("missing `{key}`")))
        };
        let vertex = |key: &str| {
            get(key)?
                .parse::<usize>()
                .map_err(|_| ParseCertificateError(format!("`{key}` is not a vertex")))
        };
        match kind {
            "strong-support" if fields.len() == 4 => Ok(Certificate::strong_support(
                parse_set(get("J")?)?,
                vertex("s")?,
                vertex("l1")?,
                vertex("l2")?,
            )),
            "unequal-maximal-sets" if fields.len() == 2 => Ok(Certificate::UnequalMaximalSets {
                first: parse_set(get("M1")?)?,
                second: parse_set(get("M2")?)?,
            }),
            other => Err(ParseCertificateError(format!(
                "unknown certificate `{other}` with {} fields",
                fields.len()
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{prism, ProductLabeling};
    use crate::named::{cycle, path};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn verifier_examples() {
        // P3 □ K2 with P3 = 0-1-2: J = {2²}, support 0¹, leaves 1¹ and 0².
        let (p, lab): (Graph, ProductLabeling) = prism(&path(3)).unwrap();
        let cert = Certificate::strong_support(
            VertexSet::singleton(lab.encode(2, 1)),
            lab.encode(0, 0),
            lab.encode(1, 0),
            lab.encode(0, 1),
        );
        assert!(verify_certificate(&p, &cert).unwrap());

        let c5 = cycle(5);
        let equal = Certificate::UnequalMaximalSets {
            first: set(&[0, 2]),
            second: set(&[1, 3]),
        };
        assert!(!verify_certificate(&c5, &equal).unwrap());

        let no_leaves = Certificate::strong_support(VertexSet::new(), 0, 1, 4);
        assert!(!verify_certificate(&c5, &no_leaves).unwrap());

        let p3 = path(3);
        let good = Certificate::UnequalMaximalSets {
            first: set(&[0, 2]),
            second: set(&[1]),
        };
        assert!(verify_certificate(&p3, &good).unwrap());
        let not_maximal = Certificate::UnequalMaximalSets {
            first: set(&[0]),
            second: set(&[1]),
        };
        assert!(!verify_certificate(&p3, &not_maximal).unwrap());
    }

    #[test]
    fn verifier_rejects_degenerate_shapes() {
        let (p, _) = prism(&path(3)).unwrap();
        // Dependent J.
        let dependent = Certificate::strong_support(set(&[0, 1]), 4, 2, 3);
        assert!(!verify_certificate(&p, &dependent).unwrap());
        // Repeated leaf.
        let repeated = Certificate::StrongSupport {
            independent: set(&[5]),
            support: 0,
            leaves: [2, 2],
        };
        assert!(!verify_certificate(&p, &repeated).unwrap());
        assert_eq!(
            verify_certificate(&p, &Certificate::strong_support(VertexSet::new(), 6, 0, 1)),
            Err(CertificateError::VertexOutOfRange { vertex: 6, order: 6 })
        );
    }

    #[test]
    fn text_form_round_trips() {
        let c = Certificate::strong_support(set(&[5, 2]), 0, 4, 1);
        let text = c.to_string();
        assert_eq!(text, "strong-support J={2,5} s=0 l1=1 l2=4");
        assert_eq!(text.parse::<Certificate>().unwrap(), c);
        let u = Certificate::UnequalMaximalSets {
            first: set(&[0, 2]),
            second: set(&[1]),
        };
        assert_eq!(u.to_string(), "unequal-maximal-sets M1={0,2} M2={1}");
        assert_eq!(u.to_string().parse::<Certificate>().unwrap(), u);
        let empty = Certificate::strong_support(VertexSet::new(), 3, 1, 2);
        assert_eq!(empty.to_string().parse::<Certificate>().unwrap(), empty);
        assert!("strong-support J={1} s=0".parse::<Certificate>().is_err());
        assert!("bogus".parse::<Certificate>().is_err());
        assert!("strong-support J=1 s=0 l1=1 l2=2".parse::<Certificate>().is_err());
    }

    #[test]
    fn json_shape() {
        let c = Certificate::strong_support(set(&[2, 5]), 0, 1, 4);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"kind":"strong-support","independent":[2,5],"support":0,"leaves":[1,4]}"#
        );
    }
}
