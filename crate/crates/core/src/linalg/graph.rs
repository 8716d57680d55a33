use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::TropMatrix;
use crate::error::{AlgebraError, Result};

/// Precedence digraph of a square matrix: an arc j → i for every aᵢⱼ ≠ 𝟘.
fn precedence_graph(a: &TropMatrix) -> DiGraph<(), ()> {
    let n = a.rows();
    let mut g = DiGraph::with_capacity(n, n * n);
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for i in 0..n {
        for j in 0..n {
            if !a.get(i, j).is_zero() {
                g.add_edge(nodes[j], nodes[i], ());
            }
        }
    }
    g
}

/// Strongly connected components of the precedence digraph, each sorted,
/// ordered by smallest member. Indices are zero-based.
pub fn strongly_connected_components(a: &TropMatrix) -> Result<Vec<Vec<usize>>> {
    a.require_square()?;
    let g = precedence_graph(a);
    let mut comps: Vec<Vec<usize>> = tarjan_scc(&g)
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
            c.sort_unstable();
            c
        })
        .collect();
    comps.sort_unstable_by_key(|c| c[0]);
    Ok(comps)
}

/// True when the matrix cannot be brought to block-triangular form by a
/// simultaneous row/column permutation.
pub fn is_irreducible(a: &TropMatrix) -> Result<bool> {
    Ok(strongly_connected_components(a)?.len() == 1)
}

/// `Ok(())` for irreducible input, otherwise the component diagnostic.
pub fn require_irreducible(a: &TropMatrix) -> Result<()> {
    let components = strongly_connected_components(a)?;
    if components.len() == 1 {
        Ok(())
    } else {
        Err(AlgebraError::ReducibleMatrix { components })
    }
}
