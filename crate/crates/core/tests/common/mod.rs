#![allow(dead_code)]

use hikita_core::{TriPartition, Triple};

/// Legal triples `(a, b, c)` with `c < r` of degree at most `max_degree`.
pub fn triples_up_to(r: u32, max_degree: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for c in 0..r {
        for a in 0..=max_degree as u32 {
            for b in 0..=max_degree as u32 {
                let t = Triple { a, b, c };
                if (a, b, c) != (0, 0, 0) && t.degree(r) <= max_degree {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// Every tri-partition of degree at most `max_degree`, of any torus weight.
pub fn tripartitions_up_to(r: u32, max_degree: u64) -> Vec<TriPartition> {
    fn rec(
        triples: &[Triple],
        start: usize,
        budget: u64,
        r: u32,
        cur: &mut Vec<Triple>,
        out: &mut Vec<TriPartition>,
    ) {
        out.push(TriPartition::from_triples(cur.iter().copied()));
        for (i, t) in triples.iter().enumerate().skip(start) {
            let d = t.degree(r);
            if d <= budget {
                cur.push(*t);
                rec(triples, i, budget - d, r, cur, out);
                cur.pop();
            }
        }
    }
    let triples = triples_up_to(r, max_degree);
    let mut out = Vec::new();
    rec(&triples, 0, max_degree, r, &mut Vec::new(), &mut out);
    out
}
