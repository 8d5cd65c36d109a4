//! Named graph families used as fixtures.
//!
//! Labelings:
//! - `path:n`: `i ~ i+1`.
//! - `cycle:n`: `i ~ i+1 mod n`.
//! - `complete:n`: all pairs.
//! - `bipartite:a,b`: parts `0..a` and `a..a+b`.
//! - `star:k`: center `0`, leaves `1..=k`.
//! - `wheel:k`: hub `0`, rim `1..=k` forming a cycle.
//! - `petersen`: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram
//!   `5+i ~ 5+(i+2 mod 5)`.
//! - `petersen-v`: `petersen` with vertex 0 deleted and the rest shifted down.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown graph family `{0}`")]
    Unknown(String),
    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Petersen,
    PetersenMinusVertex,
}

impl Family {
    pub fn build(self) -> Result<Graph, FamilyError> {
        let invalid = |reason: &str| FamilyError::InvalidParameter {
            family: self.to_string(),
            reason: reason.to_string(),
        };
        let g = match self {
            Family::Path(n) => {
                if n == 0 {
                    return Err(invalid("a path needs at least one vertex"));
                }
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(invalid("a simple cycle needs at least 3 vertices"));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                if n == 0 {
                    return Err(invalid("a complete graph needs at least one vertex"));
                }
                Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            }
            Family::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(invalid("both parts must be nonempty"));
                }
                Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            }
            Family::Star(k) => {
                if k == 0 {
                    return Err(invalid("a star needs at least one leaf"));
                }
                Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
            }
            Family::Wheel(k) => {
                if k < 3 {
                    return Err(invalid("a wheel rim needs at least 3 vertices"));
                }
                let spokes = (1..=k).map(|i| (0, i));
                let rim = (1..=k).map(|i| (i, i % k + 1));
                Graph::from_edges(k + 1, spokes.chain(rim))
            }
            Family::Petersen => Ok(petersen()),
            Family::PetersenMinusVertex => Ok(petersen().without_vertex(0)),
        };
        Ok(g.expect("family constructions are simple graphs"))
    }
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Wheel(k) => write!(f, "wheel:{k}"),
            Family::Petersen => write!(f, "petersen"),
            Family::PetersenMinusVertex => write!(f, "petersen-v"),
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    /// Parses specs like `cycle:5`, `bipartite:2,3`, `petersen`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, Some(args)),
            None => (s, None),
        };
        let params: Vec<usize> = match args {
            None => Vec::new(),
            Some(args) => args
                .split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| FamilyError::InvalidParameter {
                    family: name.to_string(),
                    reason: format!("cannot parse `{args}` as a list of counts"),
                })?,
        };
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(FamilyError::InvalidParameter {
                    family: name.to_string(),
                    reason: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let family = match name {
            "path" => arity(1).map(|_| Family::Path(params[0])),
            "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
            "complete" => arity(1).map(|_| Family::Complete(params[0])),
            "bipartite" => arity(2).map(|_| Family::CompleteBipartite(params[0], params[1])),
            "star" => arity(1).map(|_| Family::Star(params[0])),
            "wheel" => arity(1).map(|_| Family::Wheel(params[0])),
            "petersen" => arity(0).map(|_| Family::Petersen),
            "petersen-v" => arity(0).map(|_| Family::PetersenMinusVertex),
            _ => Err(FamilyError::Unknown(name.to_string())),
        }?;
        Ok(family)
    }
}

/// Parses and builds a family spec in one step.
pub fn make_family(spec: &str) -> Result<Graph, FamilyError> {
    spec.parse::<Family>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_five() {
        let g = make_family("cycle:5").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 5));
        assert!((0..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn petersen_shape() {
        let g = make_family("petersen").unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn petersen_minus_vertex_shape() {
        let g = make_family("petersen-v").unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        assert_eq!(g.max_degree(), 3);
        assert_eq!((0..9).filter(|&v| g.degree(v) == 2).count(), 3);
    }

    #[test]
    fn complete_and_bipartite() {
        assert_eq!(make_family("complete:4").unwrap().edge_count(), 6);
        assert_eq!(make_family("bipartite:2,3").unwrap().edge_count(), 6);
        assert_eq!(make_family("wheel:5").unwrap().edge_count(), 10);
        assert_eq!(make_family("star:3").unwrap().max_degree(), 3);
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(
            make_family("cycle:2"),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert!(matches!(
            make_family("cycle"),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert!(matches!(
            make_family("cycle:x"),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert_eq!(make_family("moebius:4"), Err(FamilyError::Unknown("moebius".into())));
    }

    #[test]
    fn display_round_trips() {
        for spec in ["cycle:7", "bipartite:3,4", "petersen-v", "wheel:6"] {
            assert_eq!(spec.parse::<Family>().unwrap().to_string(), spec);
        }
    }
}
