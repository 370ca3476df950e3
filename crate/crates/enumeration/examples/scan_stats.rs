//! Temporary diagnostic: run the scan at given bounds, print stage counters
//! and identify the findings against the known classification rows.

use std::time::Instant;

use enumeration::{scan_with_statistics, SearchBounds, SearchOptions};
use grading_core::{canonical_form, SpecifyingData};

#[rustfmt::skip]
const ROWS: [([[i64; 7]; 2], [i64; 2]); 67] = [
    ([[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]],[1,1]),
    ([[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]],[2,1]),
    ([[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]],[3,1]),
    ([[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]],[1,2]),
    ([[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]],[2,2]),
    ([[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]],[3,2]),
    ([[1,1,1,1,0,0,-1],[0,0,0,0,1,1,1]],[1,1]),
    ([[1,1,1,1,0,0,-1],[0,0,0,0,1,1,1]],[1,2]),
    ([[1,1,1,1,0,0,-1],[0,0,0,0,1,1,1]],[2,1]),
    ([[1,1,1,1,0,0,-1],[0,0,0,0,1,1,1]],[2,2]),
    ([[1,1,1,1,0,0,-2],[0,0,0,0,1,1,1]],[1,1]),
    ([[1,1,1,1,0,0,-2],[0,0,0,0,1,1,1]],[1,2]),
    ([[1,1,1,1,0,0,0],[0,0,0,1,1,1,1]],[1,2]),
    ([[1,1,1,1,0,0,0],[0,0,0,1,1,1,1]],[2,3]),
    ([[1,1,1,1,0,0,-1],[0,0,0,1,1,1,1]],[1,3]),
    ([[1,1,1,1,1,0,0],[0,0,0,0,1,1,1]],[2,1]),
    ([[1,1,1,1,1,0,0],[0,0,0,0,1,1,1]],[3,2]),
    ([[1,1,1,1,0,0,0],[-1,0,0,0,1,1,1]],[3,1]),
    ([[1,1,1,1,0,0,0],[-1,0,0,0,1,1,1]],[2,1]),
    ([[1,1,1,1,0,0,0],[-1,0,0,0,1,1,1]],[1,1]),
    ([[1,1,1,1,1,0,0],[-1,0,0,0,1,1,1]],[3,1]),
    ([[1,1,1,1,0,0,0],[0,0,1,1,1,1,1]],[2,2]),
    ([[1,1,1,1,0,0,0],[0,0,1,1,1,1,1]],[3,3]),
    ([[1,1,1,2,0,0,0],[0,0,1,2,1,1,1]],[4,4]),
    ([[1,1,2,3,0,0,0],[0,0,2,3,1,1,1]],[6,6]),
    ([[1,1,1,0,0,0,0],[0,0,1,1,1,1,1]],[2,2]),
    ([[1,1,1,0,0,0,0],[0,0,2,1,1,1,1]],[2,4]),
    ([[1,1,1,0,0,0,0],[0,0,3,1,1,1,1]],[2,6]),
    ([[1,1,1,1,0,0,0],[0,0,0,1,1,1,1]],[2,2]),
    ([[1,1,1,1,0,0,0],[0,0,0,1,1,1,1]],[3,3]),
    ([[1,1,1,2,0,0,0],[0,0,0,1,1,1,1]],[4,2]),
    ([[1,1,1,2,0,0,0],[0,0,0,2,1,1,1]],[4,4]),
    ([[1,1,2,1,0,0,0],[0,1,3,2,1,1,1]],[4,6]),
    ([[1,1,1,1,1,0,0],[0,1,1,1,1,1,1]],[2,2]),
    ([[1,1,1,1,1,0,0],[0,1,1,1,1,1,1]],[3,3]),
    ([[1,1,1,1,1,0,0],[0,1,1,1,1,1,1]],[4,4]),
    ([[1,1,1,1,2,0,0],[0,1,1,1,2,1,1]],[4,4]),
    ([[1,1,1,1,3,0,0],[0,1,1,1,3,1,1]],[6,6]),
    ([[1,1,1,2,3,0,0],[0,1,1,2,3,1,1]],[6,6]),
    ([[1,1,1,1,0,0,0],[0,1,1,1,1,1,1]],[2,2]),
    ([[1,1,1,1,0,0,0],[0,1,1,1,1,1,1]],[3,3]),
    ([[1,1,1,1,0,0,0],[0,2,2,2,1,1,1]],[2,4]),
    ([[1,1,1,1,0,0,0],[0,2,2,2,1,1,1]],[3,6]),
    ([[1,1,1,2,0,0,0],[0,1,1,2,1,1,1]],[4,4]),
    ([[1,1,1,2,0,0,0],[0,2,2,4,1,1,1]],[4,8]),
    ([[1,1,2,3,0,0,0],[0,1,2,3,1,1,1]],[6,6]),
    ([[1,1,2,3,0,0,0],[0,2,4,6,1,1,1]],[6,12]),
    ([[1,1,1,1,1,0,0],[0,1,1,1,2,1,1]],[2,2]),
    ([[1,1,1,1,1,0,0],[0,2,2,2,3,1,1]],[3,6]),
    ([[1,1,1,1,0,0,0],[0,1,1,2,1,1,1]],[2,4]),
    ([[1,1,1,2,0,0,0],[0,1,1,3,1,1,1]],[4,6]),
    ([[1,1,1,2,1,0,0],[0,1,1,3,2,1,1]],[4,6]),
    ([[1,1,1,1,1,1,0],[-1,0,0,0,0,1,1]],[2,0]),
    ([[1,1,1,1,1,1,0],[-1,0,0,0,0,1,1]],[4,0]),
    ([[1,1,1,1,1,2,0],[-1,0,0,0,0,1,1]],[3,0]),
    ([[1,1,1,1,1,3,0],[-1,0,0,0,0,1,1]],[4,0]),
    ([[1,1,1,1,3,1,0],[-1,0,0,0,0,1,1]],[6,0]),
    ([[1,1,1,1,3,0,0],[0,0,0,0,0,1,1]],[6,0]),
    ([[1,1,1,2,3,0,0],[0,0,0,0,0,1,1]],[6,0]),
    ([[1,1,1,2,3,1,0],[0,0,0,0,0,1,1]],[6,0]),
    ([[1,1,1,1,2,0,0],[0,0,0,0,0,1,1]],[4,0]),
    ([[1,1,1,1,2,1,0],[0,0,0,0,0,1,1]],[4,0]),
    ([[1,1,1,1,1,0,0],[0,0,0,0,0,1,1]],[3,0]),
    ([[1,1,1,1,1,1,0],[0,0,0,0,0,1,1]],[3,0]),
    ([[1,1,1,1,1,0,0],[0,0,0,0,0,1,1]],[2,0]),
    ([[1,1,1,1,1,1,0],[0,0,0,0,0,1,1]],[2,0]),
    ([[1,1,1,1,1,2,0],[0,0,0,0,0,1,1]],[2,0]),
];

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let entry: i64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(2);
    let mu_a: i64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(3);
    let mu_b: i64 = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(3);
    let bounds = SearchBounds {
        max_abs_entry: entry,
        max_mu: (mu_a, mu_b),
    };
    println!("bounds: {bounds:?}");

    let known: Vec<SpecifyingData> = ROWS
        .iter()
        .map(|&(q, mu)| {
            canonical_form(&SpecifyingData {
                degree_matrix: q,
                relation_degree: mu,
            })
        })
        .collect();

    let start = Instant::now();
    let (found, stats) = scan_with_statistics(&bounds, &SearchOptions::default());
    let elapsed = start.elapsed();
    println!("elapsed: {elapsed:?}");
    println!("{stats:#?}");
    println!("found: {}", found.len());

    let mut hit = vec![false; 67];
    for d in &found {
        match known.iter().position(|k| k == d) {
            Some(i) => {
                hit[i] = true;
                println!("  row {:>2}: {:?} mu={:?}", i + 1, d.degree_matrix, d.relation_degree);
            }
            None => {
                println!("  UNMATCHED: {:?} mu={:?}", d.degree_matrix, d.relation_degree);
            }
        }
    }
    let missing: Vec<usize> = (0..67).filter(|&i| !hit[i]).map(|i| i + 1).collect();
    println!("missing rows: {missing:?}");
}
