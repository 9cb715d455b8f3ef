//! Friedman mean ranks over a problems-by-algorithms score matrix.

use std::cmp::Ordering;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FriedmanRanks {
    /// Average per-problem rank of each algorithm.
    pub mean_ranks: Vec<f64>,
    /// 1 = best mean rank; equal mean ranks share the smaller ordinal.
    pub ordinal: Vec<usize>,
}

/// Rows are problems, columns algorithms. Ties get the average of the ranks they span.
pub fn friedman_rank(values: &[Vec<f64>], lower_is_better: bool) -> Result<FriedmanRanks> {
    let cols = check_matrix(values)?;
    let rows: Vec<Vec<f64>> = values
        .iter()
        .map(|row| {
            let keys: Vec<(f64, f64)> = row
                .iter()
                .map(|&v| (orient(v, lower_is_better), 0.0))
                .collect();
            average_ranks(&keys)
        })
        .collect();
    Ok(aggregate(&rows, cols))
}

/// Like [`friedman_rank`], but ties on the primary score are broken by a
/// secondary score where lower is always better (e.g. a standard deviation).
/// Ties on both share the average rank.
pub fn friedman_rank_with_tiebreak(
    primary: &[Vec<f64>],
    secondary: &[Vec<f64>],
    lower_is_better: bool,
) -> Result<FriedmanRanks> {
    let cols = check_matrix(primary)?;
    let cols2 = check_matrix(secondary)?;
    if secondary.len() != primary.len() || cols2 != cols {
        return Err(Error::InvalidParameter {
            name: "secondary",
            reason: format!(
                "shape {}x{} does not match primary {}x{}",
                secondary.len(),
                cols2,
                primary.len(),
                cols
            ),
        });
    }
    let rows: Vec<Vec<f64>> = primary
        .iter()
        .zip(secondary)
        .map(|(p, s)| {
            let keys: Vec<(f64, f64)> = p
                .iter()
                .zip(s)
                .map(|(&a, &b)| (orient(a, lower_is_better), b))
                .collect();
            average_ranks(&keys)
        })
        .collect();
    Ok(aggregate(&rows, cols))
}

fn orient(v: f64, lower_is_better: bool) -> f64 {
    if lower_is_better {
        v
    } else {
        -v
    }
}

fn check_matrix(values: &[Vec<f64>]) -> Result<usize> {
    let first = values.first().ok_or_else(|| Error::InvalidParameter {
        name: "values",
        reason: "score matrix has no rows".into(),
    })?;
    let cols = first.len();
    if cols < 2 {
        return Err(Error::InvalidParameter {
            name: "values",
            reason: format!("need at least 2 algorithms, got {cols}"),
        });
    }
    for (row, r) in values.iter().enumerate() {
        if r.len() != cols {
            return Err(Error::RaggedMatrix {
                row,
                expected: cols,
                got: r.len(),
            });
        }
        if r.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidParameter {
                name: "values",
                reason: format!("row {row} contains NaN"),
            });
        }
    }
    Ok(cols)
}

/// 1-based ranks of `keys` ordered lexicographically, ties averaged.
pub(crate) fn average_ranks(keys: &[(f64, f64)]) -> Vec<f64> {
    let cmp = |a: &(f64, f64), b: &(f64, f64)| -> Ordering {
        a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1))
    };
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&i, &j| cmp(&keys[i], &keys[j]));
    let mut ranks = vec![0.0; keys.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && cmp(&keys[order[start]], &keys[order[end]]) == Ordering::Equal {
            end += 1;
        }
        // positions start..end hold ranks start+1..=end
        let avg = (start + 1 + end) as f64 / 2.0;
        for &k in &order[start..end] {
            ranks[k] = avg;
        }
        start = end;
    }
    ranks
}

fn aggregate(rows: &[Vec<f64>], cols: usize) -> FriedmanRanks {
    let n = rows.len() as f64;
    let mean_ranks: Vec<f64> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c]).sum::<f64>() / n)
        .collect();
    let ordinal = mean_ranks
        .iter()
        .map(|&m| 1 + mean_ranks.iter().filter(|&&o| o < m - 1e-12).count())
        .collect();
    FriedmanRanks {
        mean_ranks,
        ordinal,
    }
}

/// A labelled score matrix as read from CSV: a header `problem,<alg>,...`
/// followed by one row per problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    pub algorithms: Vec<String>,
    pub problems: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

pub fn read_score_csv(path: impl AsRef<Path>) -> Result<ScoreTable> {
    let path = path.as_ref();
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Error::csv(path, e))?;
    let header = rdr.headers().map_err(|e| Error::csv(path, e))?.clone();
    let algorithms: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut problems = Vec::new();
    let mut values = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::csv(path, e))?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        problems.push(rec.get(0).unwrap_or_default().to_string());
        let row = rec
            .iter()
            .skip(1)
            .map(|s| {
                s.parse::<f64>().map_err(|_| Error::InvalidParameter {
                    name: "input",
                    reason: format!("{}: `{s}` is not a number", path.display()),
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        values.push(row);
    }
    Ok(ScoreTable {
        algorithms,
        problems,
        values,
    })
}

pub fn write_ranks_csv(
    path: impl AsRef<Path>,
    algorithms: &[String],
    ranks: &FriedmanRanks,
) -> Result<()> {
    let path = path.as_ref();
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(["algorithm", "mean_rank", "rank"])
        .map_err(|e| Error::csv(path, e))?;
    for ((name, m), o) in algorithms.iter().zip(&ranks.mean_ranks).zip(&ranks.ordinal) {
        w.write_record([name.clone(), format!("{m:.16e}"), o.to_string()])
            .map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn symmetric_pair() {
        let r = friedman_rank(&[vec![1.0, 2.0], vec![2.0, 1.0]], true).unwrap();
        assert_eq!(r.mean_ranks, vec![1.5, 1.5]);
        assert_eq!(r.ordinal, vec![1, 1]);
    }

    #[test]
    fn consistent_order() {
        let r = friedman_rank(&[vec![1.0, 2.0, 3.0], vec![1.0, 2.0, 3.0]], true).unwrap();
        assert_eq!(r.mean_ranks, vec![1.0, 2.0, 3.0]);
        assert_eq!(r.ordinal, vec![1, 2, 3]);
    }

    #[test]
    fn higher_is_better_flips() {
        let r = friedman_rank(&[vec![1.0, 2.0, 3.0]], false).unwrap();
        assert_eq!(r.mean_ranks, vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn ties_average() {
        assert_eq!(
            average_ranks(&[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]),
            vec![1.5, 1.5, 3.0]
        );
        assert_eq!(
            average_ranks(&[(5.0, 0.0), (5.0, 0.0), (5.0, 0.0), (5.0, 0.0)]),
            vec![2.5; 4]
        );
    }

    #[test]
    fn tiebreak_splits_primary_ties() {
        let r = friedman_rank_with_tiebreak(&[vec![0.0, 0.0, 1.0]], &[vec![2.0, 1.0, 0.0]], true)
            .unwrap();
        assert_eq!(r.mean_ranks, vec![2.0, 1.0, 3.0]);
    }

    #[test]
    fn ragged_rejected() {
        let err = friedman_rank(&[vec![1.0, 2.0], vec![1.0]], true).unwrap_err();
        assert!(matches!(
            err,
            Error::RaggedMatrix {
                row: 1,
                expected: 2,
                got: 1
            }
        ));
    }

    #[test]
    fn single_algorithm_rejected() {
        assert!(friedman_rank(&[vec![1.0]], true).is_err());
        assert!(friedman_rank(&[], true).is_err());
    }

    proptest! {
        #[test]
        fn invariant_under_monotone_transform(
            rows in prop::collection::vec(prop::collection::vec(-50i32..50, 4), 1..12)
        ) {
            let a: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect();
            let b: Vec<Vec<f64>> = a.iter().map(|r| r.iter().map(|v| (v / 10.0).exp() * 3.0 - 7.0).collect()).collect();
            let ra = friedman_rank(&a, true).unwrap();
            let rb = friedman_rank(&b, true).unwrap();
            prop_assert_eq!(ra, rb);
        }

        #[test]
        fn ranks_sum_per_row(row in prop::collection::vec(-5i32..5, 2..10)) {
            let v: Vec<(f64, f64)> = row.iter().map(|&x| (x as f64, 0.0)).collect();
            let n = v.len() as f64;
            let s: f64 = average_ranks(&v).iter().sum();
            prop_assert!((s - n * (n + 1.0) / 2.0).abs() < 1e-9);
        }
    }
}
