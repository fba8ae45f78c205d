use std::collections::{BTreeMap, VecDeque};

use petgraph::algo::{tarjan_scc, toposort};
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use super::BorderPrebasis;
use crate::error::{Error, Result};
use crate::poly::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicityReport {
    pub acyclic: bool,
    /// Scalar-border elements in elimination order, then the rest in input order.
    pub topological_order: Option<Vec<usize>>,
    pub cycle_witness: Option<Vec<Monomial>>,
}

/// Edges `x^β → x^γ` whenever an element with scalar border monomial `x^β`
/// has a tail term on the scalar border monomial `x^γ`.
fn dependency_graph(pb: &BorderPrebasis) -> (DiGraph<Monomial, ()>, BTreeMap<Monomial, NodeIndex>) {
    let mut graph = DiGraph::new();
    let mut nodes = BTreeMap::new();
    let scalar = pb.scalar_indices();
    for &i in &scalar {
        let m = &pb.elements()[i].border.monomial;
        nodes
            .entry(m.clone())
            .or_insert_with(|| graph.add_node(m.clone()));
    }
    for &i in &scalar {
        let e = &pb.elements()[i];
        let from = nodes[&e.border.monomial];
        for m in e.tail.support() {
            if let Some(&to) = nodes.get(m) {
                graph.update_edge(from, to, ());
            }
        }
    }
    (graph, nodes)
}

pub fn acyclicity(pb: &BorderPrebasis) -> AcyclicityReport {
    let (graph, _) = dependency_graph(pb);
    match toposort(&graph, None) {
        Ok(order) => {
            let mut perm = Vec::with_capacity(pb.len());
            for n in order {
                let m = &graph[n];
                perm.extend(
                    pb.scalar_indices()
                        .into_iter()
                        .filter(|&i| pb.elements()[i].border.monomial == *m),
                );
            }
            perm.extend(pb.monomial_indices());
            AcyclicityReport {
                acyclic: true,
                topological_order: Some(perm),
                cycle_witness: None,
            }
        }
        Err(_) => AcyclicityReport {
            acyclic: false,
            topological_order: None,
            cycle_witness: Some(find_cycle(&graph)),
        },
    }
}

/// The elimination order, or `NotAcyclic` with a witness cycle.
pub fn well_order(pb: &BorderPrebasis) -> Result<Vec<usize>> {
    let r = acyclicity(pb);
    match r.topological_order {
        Some(order) => Ok(order),
        None => Err(Error::NotAcyclic {
            cycle: r.cycle_witness.unwrap_or_default(),
        }),
    }
}

/// A shortest cycle through the least monomial of some nontrivial
/// strongly connected component.
fn find_cycle(graph: &DiGraph<Monomial, ()>) -> Vec<Monomial> {
    let scc = tarjan_scc(graph)
        .into_iter()
        .filter(|c| c.len() > 1)
        .min_by_key(|c| c.iter().map(|&n| graph[n].clone()).min())
        .expect("toposort reported a cycle");
    let start = *scc.iter().min_by_key(|&&n| &graph[n]).expect("nonempty");
    let mut prev: BTreeMap<NodeIndex, NodeIndex> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(n) = queue.pop_front() {
        let mut succ: Vec<NodeIndex> = graph.neighbors(n).filter(|s| scc.contains(s)).collect();
        succ.sort_by_key(|&s| &graph[s]);
        for s in succ {
            if s == start {
                let mut path = vec![n];
                let mut cur = n;
                while cur != start {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return path.into_iter().map(|n| graph[n].clone()).collect();
            }
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(s) {
                e.insert(n);
                queue.push_back(s);
            }
        }
    }
    unreachable!("a strongly connected component with two nodes has a cycle")
}
