//! Brute-force ground truth: the class and its sum indecomposable members,
//! generated straight from the definitions.

use num_bigint::BigInt;

use crate::automaton::{build, build_indecomposable, BuildOptions};
use crate::error::{Error, Result};
use crate::perm::{Basis, Permutation};
use crate::ratfunc::{series_from_automaton, Series};
use crate::regularity::{check_regular, RegularityReport};

/// Largest length the oracle will enumerate.
pub const MAX_ORACLE_LEN: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCounts {
    pub class_counts: Series,
    pub indecomposable_counts: Series,
    pub n_max: usize,
}

/// `Av(basis)` by length: level `n` consists of the avoiders obtained by
/// inserting `n` anywhere into a level `n-1` avoider. Level 0 holds the
/// empty permutation.
pub fn enumerate_levels(basis: &Basis, n_max: usize) -> Result<Vec<Vec<Permutation>>> {
    if n_max > MAX_ORACLE_LEN {
        return Err(Error::Guard {
            guard: "oracle_max_len",
            limit: MAX_ORACLE_LEN,
        });
    }
    let mut levels = vec![vec![Permutation::empty()]];
    for n in 1..=n_max {
        let mut next = Vec::new();
        for parent in levels.last().unwrap() {
            for pos in 0..n {
                let mut entries = parent.entries().to_vec();
                entries.insert(pos, n as u8);
                let child = Permutation::new(entries)?;
                if child.avoids(basis) {
                    next.push(child);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

pub fn enumerate_class(basis: &Basis, n_max: usize) -> Result<OracleCounts> {
    let levels = enumerate_levels(basis, n_max)?;
    let class_counts = Series(levels.iter().map(|l| BigInt::from(l.len())).collect());
    let indecomposable_counts = Series(
        levels
            .iter()
            .map(|l| {
                let k = l
                    .iter()
                    .filter(|p| !p.is_empty() && is_sum_indecomposable(p).unwrap_or(false))
                    .count();
                BigInt::from(k)
            })
            .collect(),
    );
    Ok(OracleCounts {
        class_counts,
        indecomposable_counts,
        n_max,
    })
}

/// True iff no proper nonempty prefix of positions holds exactly the
/// smallest values, i.e. `pi` is not a direct sum of two nonempty
/// permutations.
pub fn is_sum_indecomposable(pi: &Permutation) -> Result<bool> {
    if pi.is_empty() {
        return Err(Error::InvalidArgument(
            "sum indecomposability is defined for nonempty permutations".into(),
        ));
    }
    let n = pi.len();
    let mut prefix_max = 0u8;
    for (i, &v) in pi.entries()[..n - 1].iter().enumerate() {
        prefix_max = prefix_max.max(v);
        if prefix_max as usize == i + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// `"class"` or `"indecomposable"`.
    pub series: &'static str,
    pub n: usize,
    pub expected: BigInt,
    pub actual: BigInt,
}

#[derive(Clone, Debug)]
pub struct CompareReport {
    pub basis: Basis,
    pub n_max: usize,
    pub regularity: RegularityReport,
    pub oracle: OracleCounts,
    /// Absent when the class is not regular.
    pub automaton_series: Option<Series>,
    pub indecomposable_series: Option<Series>,
    pub mismatch: Option<Mismatch>,
}

impl CompareReport {
    pub fn matches(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn oracle_only(&self) -> bool {
        self.automaton_series.is_none()
    }
}

/// Builds both automata and diffs their series against the oracle. A class
/// failing the regularity test is reported oracle-only unless the options
/// skip the test.
pub fn compare(basis: &Basis, n_max: usize, options: &BuildOptions) -> Result<CompareReport> {
    let oracle = enumerate_class(basis, n_max)?;
    let mut regularity = check_regular(basis);
    let mut report = CompareReport {
        basis: basis.clone(),
        n_max,
        regularity: regularity.clone(),
        oracle,
        automaton_series: None,
        indecomposable_series: None,
        mismatch: None,
    };
    if !regularity.regular && !options.skip_regularity_check {
        return Ok(report);
    }
    let class = build(basis, options)?;
    let indec = build_indecomposable(basis, options)?;
    if regularity.regular {
        regularity.slot_bound = Some(class.slot_bound());
        report.regularity = regularity;
    }
    let class_series = series_from_automaton(&class, n_max);
    let indec_series = series_from_automaton(&indec, n_max);
    let diff = |name, expected: &Series, actual: &Series| {
        expected.first_difference(actual).map(|n| Mismatch {
            series: name,
            n,
            expected: expected.0[n].clone(),
            actual: actual.0[n].clone(),
        })
    };
    report.mismatch = diff("class", &report.oracle.class_counts, &class_series).or_else(|| {
        // Index 0 is outside the indecomposable definition.
        diff(
            "indecomposable",
            &Series(report.oracle.indecomposable_counts.0[1..].to_vec()),
            &Series(indec_series.0[1..].to_vec()),
        )
        .map(|m| Mismatch { n: m.n + 1, ..m })
    });
    report.automaton_series = Some(class_series);
    report.indecomposable_series = Some(indec_series);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::standardize;

    fn basis(s: &str) -> Basis {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn class_examples() {
        let c = enumerate_class(&basis("123"), 4).unwrap();
        assert_eq!(c.class_counts, Series::from_u64s(&[1, 1, 2, 5, 14]));
        let c = enumerate_class(&basis("4321,3142"), 4).unwrap();
        assert_eq!(c.class_counts.0[4], BigInt::from(22));
        let c = enumerate_class(&basis("21"), 7).unwrap();
        assert_eq!(c.class_counts, Series::from_u64s(&[1; 8]));
        assert_eq!(
            c.indecomposable_counts,
            Series::from_u64s(&[0, 1, 0, 0, 0, 0, 0, 0])
        );
        assert!(enumerate_class(&basis("21"), MAX_ORACLE_LEN + 1).is_err());
    }

    #[test]
    fn levels_agree_with_filtering_all_permutations() {
        for bs in ["123", "4321,3142", "132,4321", "2413,3142", "1"] {
            let b = basis(bs);
            let levels = enumerate_levels(&b, 7).unwrap();
            for (n, level) in levels.iter().enumerate() {
                let mut direct: Vec<Permutation> =
                    Permutation::all(n).filter(|p| p.avoids(&b)).collect();
                let mut generated = level.clone();
                direct.sort();
                generated.sort();
                assert_eq!(generated, direct, "{bs} at {n}");
            }
        }
    }

    #[test]
    fn class_is_downward_closed() {
        let b = basis("4321,1324");
        let levels = enumerate_levels(&b, 7).unwrap();
        for n in 1..=7 {
            let below: std::collections::HashSet<&Permutation> = levels[n - 1].iter().collect();
            for pi in levels[n].iter().step_by(5) {
                for i in 0..n {
                    assert!(below.contains(&pi.delete(i)));
                }
            }
        }
    }

    #[test]
    fn indecomposable_examples() {
        for s in ["231", "312", "321", "1"] {
            assert!(is_sum_indecomposable(&perm(s)).unwrap(), "{s}");
        }
        for s in ["123", "132", "213", "12"] {
            assert!(!is_sum_indecomposable(&perm(s)).unwrap(), "{s}");
        }
        assert!(is_sum_indecomposable(&Permutation::empty()).is_err());
    }

    #[test]
    fn indecomposable_iff_not_a_direct_sum() {
        for n in 1..=7 {
            for pi in Permutation::all(n) {
                let e = pi.entries();
                let split = (1..n).any(|k| {
                    let left = standardize(&e[..k]).unwrap();
                    let right = standardize(&e[k..]).unwrap();
                    left.direct_sum(&right) == pi
                });
                assert_eq!(is_sum_indecomposable(&pi).unwrap(), !split, "{pi}");
            }
        }
    }

    #[test]
    fn compare_examples() {
        let opts = BuildOptions::default();
        let r = compare(&basis("4321,3142"), 9, &opts).unwrap();
        assert!(r.matches() && !r.oracle_only());
        let r = compare(&basis("21"), 9, &opts).unwrap();
        assert!(r.matches());
        assert_eq!(
            r.indecomposable_series.unwrap(),
            Series::from_u64s(&[0, 1, 0, 0, 0, 0, 0, 0, 0, 0])
        );
        let r = compare(&basis("123"), 9, &opts).unwrap();
        assert!(r.oracle_only());
        assert_eq!(r.oracle.class_counts.0[9], BigInt::from(4862));
    }
}
