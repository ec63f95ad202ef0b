//! The graph families: unitary addition Cayley graphs `G_n`, unitary Cayley
//! graphs `X_n`, complete graphs `K_n`, and complements of each.
//!
//! Graphs are small (desk scale) and stored as dense 0/1 adjacency.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, gcd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `i ~ j` iff `i + j` is a unit mod n.
    Uacg,
    /// `i ~ j` iff `i - j` is a unit mod n.
    UnitaryCayley,
    Complete,
}

impl Family {
    fn cli_name(self) -> &'static str {
        match self {
            Family::Uacg => "uacg",
            Family::UnitaryCayley => "unitary-cayley",
            Family::Complete => "complete",
        }
    }
}

/// Symbolic identity of a graph. A complement is a flag rather than a
/// nested spec, so double complements collapse back to the base family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    family: Family,
    complemented: bool,
    n: usize,
}

impl GraphSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("graph order n = {n} < 2")));
        }
        Ok(Self { family, complemented: false, n })
    }

    pub fn uacg(n: usize) -> Result<Self> {
        Self::new(Family::Uacg, n)
    }

    pub fn complement_of_uacg(n: usize) -> Result<Self> {
        Ok(Self::uacg(n)?.complement())
    }

    pub fn complement(self) -> Self {
        Self { complemented: !self.complemented, ..self }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_complement(&self) -> bool {
        self.complemented
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count without building the graph.
    pub fn edge_count(&self) -> usize {
        let n = self.n;
        let phi = euler_phi(n as u64) as usize;
        let base = match self.family {
            Family::Uacg if n % 2 == 1 => (n - 1) * phi / 2,
            Family::Uacg | Family::UnitaryCayley => n * phi / 2,
            Family::Complete => n * (n - 1) / 2,
        };
        if self.complemented {
            n * (n - 1) / 2 - base
        } else {
            base
        }
    }

    pub fn build(&self) -> Graph {
        let base = match self.family {
            Family::Uacg => build_uacg_unchecked(self.n),
            Family::UnitaryCayley => build_unitary_cayley_unchecked(self.n),
            Family::Complete => complete_unchecked(self.n),
        };
        if self.complemented {
            complement(&base)
        } else {
            base
        }
    }

    /// Parses a CLI family name (`uacg`, `complement-unitary-cayley`, ...).
    pub fn from_cli(name: &str, n: usize) -> Result<Self> {
        let (complemented, base) = match name.strip_prefix("complement-") {
            Some(rest) => (true, rest),
            None => (false, name),
        };
        let family = base.parse::<Family>()?;
        let spec = Self::new(family, n)?;
        Ok(if complemented { spec.complement() } else { spec })
    }

    pub fn cli_name(&self) -> String {
        if self.complemented {
            format!("complement-{}", self.family.cli_name())
        } else {
            self.family.cli_name().to_string()
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uacg" => Ok(Family::Uacg),
            "unitary-cayley" => Ok(Family::UnitaryCayley),
            "complete" => Ok(Family::Complete),
            other => Err(Error::InvalidArgument(format!("unknown graph family '{other}'"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.cli_name(), self.n)
    }
}

impl serde::Serialize for GraphSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("GraphSpec", 2)?;
        st.serialize_field("family", &self.cli_name())?;
        st.serialize_field("n", &self.n)?;
        st.end()
    }
}

/// A simple undirected graph with dense adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    spec: GraphSpec,
    n: usize,
    adjacency: Vec<bool>,
    degrees: Vec<usize>,
    edges: usize,
}

impl Graph {
    fn from_predicate(spec: GraphSpec, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let n = spec.n;
        let mut adjacency = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                if adjacent(i, j) {
                    adjacency[i * n + j] = true;
                    adjacency[j * n + i] = true;
                }
            }
        }
        let degrees: Vec<usize> = (0..n)
            .map(|i| adjacency[i * n..(i + 1) * n].iter().filter(|&&a| a).count())
            .collect();
        let edges = degrees.iter().sum::<usize>() / 2;
        Self { spec, n, adjacency, degrees, edges }
    }

    pub fn spec(&self) -> GraphSpec {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.n + j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.is_adjacent(i, j))
    }

    pub fn is_regular(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }

    /// Edge list, one `i j` pair per line with `i < j`, lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.is_adjacent(i, j) {
                    out.push_str(&format!("{i} {j}\n"));
                }
            }
        }
        out
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidArgument(format!("graph order n = {n} < 2")))
    } else {
        Ok(())
    }
}

fn build_uacg_unchecked(n: usize) -> Graph {
    let spec = GraphSpec { family: Family::Uacg, complemented: false, n };
    // i != j always holds in from_predicate, so self-loops never appear.
    Graph::from_predicate(spec, |i, j| gcd((i + j) as u64, n as u64) == 1)
}

fn build_unitary_cayley_unchecked(n: usize) -> Graph {
    let spec = GraphSpec { family: Family::UnitaryCayley, complemented: false, n };
    Graph::from_predicate(spec, |i, j| gcd((j - i) as u64, n as u64) == 1)
}

fn complete_unchecked(n: usize) -> Graph {
    let spec = GraphSpec { family: Family::Complete, complemented: false, n };
    Graph::from_predicate(spec, |_, _| true)
}

/// Unitary addition Cayley graph `G_n`.
pub fn build_uacg(n: usize) -> Result<Graph> {
    check_order(n)?;
    Ok(build_uacg_unchecked(n))
}

/// Unitary Cayley graph `X_n`.
pub fn build_unitary_cayley(n: usize) -> Result<Graph> {
    check_order(n)?;
    Ok(build_unitary_cayley_unchecked(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    check_order(n)?;
    Ok(complete_unchecked(n))
}

pub fn complement(g: &Graph) -> Graph {
    Graph::from_predicate(g.spec.complement(), |i, j| !g.is_adjacent(i, j))
}

/// Sum of squared degrees.
pub fn zagreb_index(g: &Graph) -> u64 {
    g.degrees.iter().map(|&d| (d * d) as u64).sum()
}

/// Squared Frobenius norm of the adjacency matrix, i.e. `2m`.
pub fn adjacency_frobenius_sq(g: &Graph) -> u64 {
    g.adjacency.iter().filter(|&&a| a).count() as u64
}
