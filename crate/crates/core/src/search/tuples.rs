//! Tuple assembly: extend the pair graph produced by the witness scan to
//! full n-tuples by ascending clique search.
//!
//! Completeness rests on the pair scan: any valid tuple has all pairwise
//! products equal to some f(s) ≤ bound², so every edge it needs is present.

use super::pairs::{pairs_from_values_mode, PairHit};
use super::{SearchConfig, SearchError, TupleRecord, Witness};
use crate::par::ExecMode;
use crate::polyarith::IntPoly;
use crate::sunit::{PrimeSet, SUnit};
use num_bigint::BigUint;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};

type PairKey = (BigUint, BigUint);

struct PairGraph {
    witnesses: BTreeMap<PairKey, SUnit>,
    adjacency: BTreeMap<BigUint, BTreeSet<BigUint>>,
}

impl PairGraph {
    fn build(hits: Vec<PairHit>) -> PairGraph {
        let mut witnesses = BTreeMap::new();
        let mut adjacency: BTreeMap<BigUint, BTreeSet<BigUint>> = BTreeMap::new();
        for hit in hits {
            adjacency
                .entry(hit.a.clone())
                .or_default()
                .insert(hit.b.clone());
            adjacency
                .entry(hit.b.clone())
                .or_default()
                .insert(hit.a.clone());
            witnesses.insert((hit.a, hit.b), hit.witness);
        }
        PairGraph {
            witnesses,
            adjacency,
        }
    }

    fn witness(&self, a: &BigUint, b: &BigUint) -> &SUnit {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        &self.witnesses[&key]
    }
}

/// All n-tuples within the bound, sorted lexicographically by values.
pub fn search_tuples_mode(
    s: &PrimeSet,
    f: &IntPoly,
    cfg: &SearchConfig,
    mode: ExecMode,
) -> Result<Vec<TupleRecord>, SearchError> {
    if cfg.n < 2 {
        return Err(SearchError::InvalidInput("tuple size must be at least 2".into()));
    }
    let hits = pairs_from_values_mode(s, f, &cfg.bound, mode)?;
    let graph = PairGraph::build(hits);

    let mut results = Vec::new();
    let all_values: Vec<BigUint> = graph.adjacency.keys().cloned().collect();
    let mut current: Vec<BigUint> = Vec::with_capacity(cfg.n);
    for v in &all_values {
        current.push(v.clone());
        let candidates = admissible(&graph, v, cfg.strict, None);
        extend(&graph, cfg, &mut current, &candidates, &mut results);
        current.pop();
    }

    let one = BigUint::one();
    let records = results
        .into_iter()
        .filter(|values| {
            if !cfg.exclude_trivial {
                return true;
            }
            values.iter().filter(|v| **v == one).count() < 2
        })
        .map(|values| assemble(s, f, &graph, values))
        .collect();
    Ok(records)
}

/// Values adjacent to `v` that may legally follow it, optionally pre-pruned
/// by an existing candidate set.
fn admissible(
    graph: &PairGraph,
    v: &BigUint,
    strict: bool,
    within: Option<&BTreeSet<BigUint>>,
) -> BTreeSet<BigUint> {
    let neighbors = match graph.adjacency.get(v) {
        Some(set) => set,
        None => return BTreeSet::new(),
    };
    neighbors
        .iter()
        .filter(|u| if strict { *u > v } else { *u >= v })
        .filter(|u| within.map_or(true, |set| set.contains(*u)))
        .cloned()
        .collect()
}

fn extend(
    graph: &PairGraph,
    cfg: &SearchConfig,
    current: &mut Vec<BigUint>,
    candidates: &BTreeSet<BigUint>,
    results: &mut Vec<Vec<BigUint>>,
) {
    if current.len() == cfg.n {
        results.push(current.clone());
        return;
    }
    for v in candidates {
        current.push(v.clone());
        let next = admissible(graph, v, cfg.strict, Some(candidates));
        extend(graph, cfg, current, &next, results);
        current.pop();
    }
}

fn assemble(s: &PrimeSet, f: &IntPoly, graph: &PairGraph, values: Vec<BigUint>) -> TupleRecord {
    let mut witnesses = Vec::new();
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            witnesses.push(Witness {
                i,
                j,
                s: graph.witness(&values[i], &values[j]).clone(),
            });
        }
    }
    TupleRecord {
        values,
        witnesses,
        prime_set: s.clone(),
        poly: f.clone(),
    }
}
