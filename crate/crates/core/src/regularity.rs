//! Deciding whether a class has a regular insertion encoding.
//!
//! The encoding is regular exactly when the class contains only finitely
//! many vertical alternations. Long alternations contain long parallel or
//! wedge alternations, and each of the four oriented families is excluded
//! precisely when the basis has an element inside a fixed small class:
//!
//! | condition         | basis needs a member of   |
//! |-------------------|---------------------------|
//! | parallel          | Av(123, 3142, 3412)       |
//! | wedge             | Av(132, 312)              |
//! | parallel reversed | Av(321, 2143, 2413)       |
//! | wedge reversed    | Av(213, 231)              |

use serde::Serialize;

use crate::perm::{Basis, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Parallel,
    Wedge,
    ParallelReversed,
    WedgeReversed,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::Parallel,
        Orientation::Wedge,
        Orientation::ParallelReversed,
        Orientation::WedgeReversed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Parallel => "parallel",
            Orientation::Wedge => "wedge",
            Orientation::ParallelReversed => "parallel_reversed",
            Orientation::WedgeReversed => "wedge_reversed",
        }
    }

    /// Patterns defining the class whose members, placed in a basis, bound
    /// the length of this alternation family.
    pub fn defining_patterns(self) -> &'static [&'static str] {
        match self {
            Orientation::Parallel => &["123", "3142", "3412"],
            Orientation::Wedge => &["132", "312"],
            Orientation::ParallelReversed => &["321", "2143", "2413"],
            Orientation::WedgeReversed => &["213", "231"],
        }
    }

    pub fn defining_basis(self) -> Basis {
        Basis::normalize(
            self.defining_patterns()
                .iter()
                .map(|s| s.parse::<Permutation>().expect("static pattern")),
        )
        .expect("static basis")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub orientation: Orientation,
    pub passed: bool,
    /// A basis element inside the defining class, when one exists.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub regular: bool,
    pub checks: Vec<ConditionCheck>,
    /// Largest slot count over the automaton's states, once built.
    pub slot_bound: Option<usize>,
}

impl RegularityReport {
    pub fn check(&self, orientation: Orientation) -> &ConditionCheck {
        self.checks
            .iter()
            .find(|c| c.orientation == orientation)
            .expect("all four orientations are checked")
    }

    pub fn failing(&self) -> impl Iterator<Item = &ConditionCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn check_regular(basis: &Basis) -> RegularityReport {
    let checks: Vec<ConditionCheck> = Orientation::ALL
        .iter()
        .map(|&orientation| {
            let class = orientation.defining_basis();
            let witness = basis.elements().iter().find(|b| b.avoids(&class));
            ConditionCheck {
                orientation,
                passed: witness.is_some(),
                witness: witness.map(|w| w.to_string()),
            }
        })
        .collect();
    RegularityReport {
        regular: checks.iter().all(|c| c.passed),
        checks,
        slot_bound: None,
    }
}

/// The vertical alternation of even length `n` in the given orientation.
///
/// Parallel: both halves decrease, the high half on even positions
/// (`5,10,4,9,3,8,2,7,1,6` for `n = 10`). Wedge: high half increasing on odd
/// positions, low half decreasing on even positions (`6,5,7,4,8,3,9,2,10,1`).
/// The reversed orientations are the reversals of these.
pub fn alternation_witness(orientation: Orientation, n: usize) -> Permutation {
    assert!(
        n >= 2 && n.is_multiple_of(2),
        "alternations have positive even length"
    );
    let half = n / 2;
    let mut entries = Vec::with_capacity(n);
    for j in 1..=half {
        match orientation {
            Orientation::Parallel | Orientation::ParallelReversed => {
                entries.push((half + 1 - j) as u8);
                entries.push((n + 1 - j) as u8);
            }
            Orientation::Wedge | Orientation::WedgeReversed => {
                entries.push((half + j) as u8);
                entries.push((half + 1 - j) as u8);
            }
        }
    }
    let pi = Permutation::new(entries).expect("alternation is a permutation");
    match orientation {
        Orientation::ParallelReversed | Orientation::WedgeReversed => pi.reverse(),
        _ => pi,
    }
}
