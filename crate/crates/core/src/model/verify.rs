//! The verifier: the single source of truth for "this is a factorization".

use std::fmt;

use crate::digraph::{Digraph, Vertex};
use crate::model::factor::TwoFactor;
use crate::model::spec::CycleProfile;

/// Why a factorization was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    VertexOutOfRange {
        vertex: Vertex,
    },
    /// A vertex appears in two cycles of the factor (or twice in one).
    DegreeViolation {
        vertex: Vertex,
    },
    NonSpanning {
        missing: Vertex,
    },
    NonHostArc {
        tail: Vertex,
        head: Vertex,
    },
    /// The arc was already used by factor `first_factor` (0-based).
    DuplicateArc {
        tail: Vertex,
        head: Vertex,
        first_factor: usize,
    },
    MixedCycleLengths {
        lengths: Vec<usize>,
    },
    WrongCycleLength {
        length: usize,
    },
    /// A host arc no factor covers.
    MissingArc {
        tail: Vertex,
        head: Vertex,
    },
    CountMismatch {
        expected: CycleProfile,
        found: CycleProfile,
    },
}

/// First failure found, with the 0-based factor index it was found in when
/// it belongs to a single factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub factor: Option<usize>,
    pub reason: FailureReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub counts: CycleProfile,
    pub first_failure: Option<Failure>,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} outside the host"),
            Self::DegreeViolation { vertex } => write!(f, "vertex {vertex} covered more than once"),
            Self::NonSpanning { missing } => write!(f, "vertex {missing} not covered"),
            Self::NonHostArc { tail, head } => write!(f, "arc ({tail},{head}) not in host"),
            Self::DuplicateArc {
                tail,
                head,
                first_factor,
            } => {
                write!(f, "arc ({tail},{head}) already used by factor {}", first_factor + 1)
            }
            Self::MixedCycleLengths { lengths } => write!(f, "mixed cycle lengths {lengths:?}"),
            Self::WrongCycleLength { length } => write!(f, "cycle length {length} not requested"),
            Self::MissingArc { tail, head } => write!(f, "host arc ({tail},{head}) not covered"),
            Self::CountMismatch { expected, found } => {
                write!(f, "factor counts {found} differ from expected {expected}")
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(f, "valid {}", self.counts),
            Some(Failure {
                factor: Some(i),
                reason,
            }) => write!(f, "invalid: factor {}: {reason}", i + 1),
            Some(Failure { factor: None, reason }) => write!(f, "invalid: {reason}"),
        }
    }
}

/// A generic "each unit is a set of cycles" view shared by the directed and
/// undirected verifiers. Units yield their vertices and their covered pairs.
pub(crate) struct Unit<'a> {
    pub cycle_lengths: Vec<usize>,
    pub vertices: Box<dyn Iterator<Item = Vertex> + 'a>,
    pub pairs: Box<dyn Iterator<Item = (Vertex, Vertex)> + 'a>,
}

/// Core check. `pair_total` is how many distinct pairs the host holds;
/// `host_pair` tests membership and `pairs` are already normalized (ordered
/// arcs for digraphs, `(min,max)` edges for graphs).
pub(crate) fn check_units<'a, I>(
    vertex_count: usize,
    pair_total: usize,
    host_pair: &dyn Fn(Vertex, Vertex) -> bool,
    all_host_pairs: &dyn Fn() -> Box<dyn Iterator<Item = (Vertex, Vertex)> + 'a>,
    units: I,
    expect: Option<&CycleProfile>,
) -> Verdict
where
    I: IntoIterator<Item = Unit<'a>>,
{
    let v = vertex_count;
    let mut owner: Vec<u32> = vec![0; v * v];
    let mut covered = 0usize;
    let mut counts = CycleProfile::default();
    let mut first: Option<Failure> = None;
    let fail = |first: &mut Option<Failure>, factor: Option<usize>, reason| {
        if first.is_none() {
            *first = Some(Failure { factor, reason });
        }
    };

    let mut seen = vec![usize::MAX; v];
    for (i, unit) in units.into_iter().enumerate() {
        let idx = Some(i);
        let mut local_bad = false;
        let mut hits = 0usize;
        for x in unit.vertices {
            if x >= v {
                fail(&mut first, idx, FailureReason::VertexOutOfRange { vertex: x });
                local_bad = true;
                continue;
            }
            if seen[x] == i {
                fail(&mut first, idx, FailureReason::DegreeViolation { vertex: x });
                local_bad = true;
            } else {
                seen[x] = i;
                hits += 1;
            }
        }
        if !local_bad && hits < v {
            let missing = (0..v).find(|&x| seen[x] != i).expect("some vertex uncovered");
            fail(&mut first, idx, FailureReason::NonSpanning { missing });
        }
        for (t, h) in unit.pairs {
            if t >= v || h >= v {
                continue;
            }
            if !host_pair(t, h) {
                fail(&mut first, idx, FailureReason::NonHostArc { tail: t, head: h });
                continue;
            }
            let slot = &mut owner[t * v + h];
            if *slot != 0 {
                fail(
                    &mut first,
                    idx,
                    FailureReason::DuplicateArc {
                        tail: t,
                        head: h,
                        first_factor: *slot as usize - 1,
                    },
                );
            } else {
                *slot = i as u32 + 1;
                covered += 1;
            }
        }
        let mut lengths = unit.cycle_lengths;
        lengths.sort_unstable();
        lengths.dedup();
        match lengths.as_slice() {
            [] => fail(&mut first, idx, FailureReason::NonSpanning { missing: 0 }),
            [l] => {
                if let Some(p) = expect {
                    if p.get(*l) == 0 {
                        fail(&mut first, idx, FailureReason::WrongCycleLength { length: *l });
                    }
                }
                counts.add(*l, 1);
            }
            _ => fail(&mut first, idx, FailureReason::MixedCycleLengths { lengths }),
        }
    }

    if covered < pair_total {
        if let Some((t, h)) = all_host_pairs().find(|&(t, h)| owner[t * v + h] == 0) {
            fail(&mut first, None, FailureReason::MissingArc { tail: t, head: h });
        }
    }
    if let Some(p) = expect {
        if *p != counts {
            fail(
                &mut first,
                None,
                FailureReason::CountMismatch {
                    expected: p.clone(),
                    found: counts.clone(),
                },
            );
        }
    }

    Verdict {
        valid: first.is_none(),
        counts,
        first_failure: first,
    }
}

/// Checks that `factors` is a directed 2-factorization of `host`: every
/// factor spans with in/out-degree one, factors are arc-disjoint, and their
/// union is exactly the host's arc set. With `expect`, each factor must be
/// monochromatic with a requested length and the counts must match.
///
/// Failures are reported in the verdict; this never panics on bad input.
pub fn verify_factors(host: &Digraph, factors: &[TwoFactor], expect: Option<&CycleProfile>) -> Verdict {
    let units = factors.iter().map(|f| Unit {
        cycle_lengths: f.cycles().iter().map(|c| c.len()).collect(),
        vertices: Box::new(f.cycles().iter().flat_map(|c| c.vertices().iter().copied())),
        pairs: Box::new(f.arcs()),
    });
    check_units(
        host.vertex_count(),
        host.arc_count(),
        &|t, h| host.has_arc(t, h),
        &|| Box::new(host.arcs()),
        units,
        expect,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::complete_symmetric;
    use crate::model::factor::Factorization;
    use crate::model::spec::ProblemSpec;

    fn factor(seqs: &[&[Vertex]]) -> TwoFactor {
        TwoFactor::from_sequences(seqs.iter().copied()).unwrap()
    }

    #[test]
    fn k3_two_orientations() {
        let host = complete_symmetric(3).unwrap();
        let fs = [factor(&[&[0, 1, 2]]), factor(&[&[0, 2, 1]])];
        let v = verify_factors(&host, &fs, Some(&CycleProfile::single(3, 2)));
        assert!(v.valid, "{v}");
        assert_eq!(v.counts, CycleProfile::single(3, 2));
    }

    #[test]
    fn duplicate_arc_is_reported() {
        let host = complete_symmetric(3).unwrap();
        let fs = [factor(&[&[0, 1, 2]]), factor(&[&[0, 1, 2]])];
        let v = verify_factors(&host, &fs, None);
        assert!(!v.valid);
        assert_eq!(
            v.first_failure.unwrap(),
            Failure {
                factor: Some(1),
                reason: FailureReason::DuplicateArc {
                    tail: 0,
                    head: 1,
                    first_factor: 0
                }
            }
        );
        // counts are reported regardless
        assert_eq!(v.counts, CycleProfile::single(3, 2));
    }

    #[test]
    fn missing_arc_and_nonspanning() {
        let host = complete_symmetric(4).unwrap();
        let fs = [factor(&[&[0, 1, 2]])];
        let v = verify_factors(&host, &fs, None);
        assert_eq!(
            v.first_failure.unwrap().reason,
            FailureReason::NonSpanning { missing: 3 }
        );
        let fs = [factor(&[&[0, 1], &[2, 3]])];
        let v = verify_factors(&host, &fs, None);
        assert_eq!(
            v.first_failure.unwrap().reason,
            FailureReason::MissingArc { tail: 0, head: 2 }
        );
    }

    #[test]
    fn overlapping_cycles_violate_degree() {
        let host = complete_symmetric(4).unwrap();
        let fs = [factor(&[&[0, 1, 2], &[2, 3]])];
        let v = verify_factors(&host, &fs, None);
        assert_eq!(
            v.first_failure.unwrap().reason,
            FailureReason::DegreeViolation { vertex: 2 }
        );
    }

    #[test]
    fn out_of_range_and_non_host() {
        let host = crate::digraph::equipartite_symmetric(2, 2).unwrap();
        let fs = [factor(&[&[0, 1], &[2, 3]])];
        let v = verify_factors(&host, &fs, None);
        assert_eq!(
            v.first_failure.unwrap().reason,
            FailureReason::NonHostArc { tail: 0, head: 1 }
        );
        let fs = [factor(&[&[0, 9]])];
        let v = verify_factors(&host, &fs, None);
        assert_eq!(
            v.first_failure.unwrap().reason,
            FailureReason::VertexOutOfRange { vertex: 9 }
        );
    }

    #[test]
    fn monochromatic_and_counts() {
        let host = complete_symmetric(4).unwrap();
        // K_4* = three digon factors
        let fs = [
            factor(&[&[0, 1], &[2, 3]]),
            factor(&[&[0, 2], &[1, 3]]),
            factor(&[&[0, 3], &[1, 2]]),
        ];
        assert!(verify_factors(&host, &fs, Some(&CycleProfile::single(2, 3))).valid);
        let wrong = verify_factors(&host, &fs, Some(&CycleProfile::single(2, 2)));
        assert!(matches!(
            wrong.first_failure.unwrap().reason,
            FailureReason::CountMismatch { .. }
        ));
        let spec = ProblemSpec::new(4, 2, 4, 3, 0).unwrap();
        let f = Factorization::new(host.clone(), fs.to_vec());
        assert!(f.verify(Some(&spec.profile())).valid);
        let spec = ProblemSpec::new(4, 3, 4, 3, 0).unwrap();
        let v = f.verify(Some(&spec.profile()));
        assert_eq!(
            v.first_failure.unwrap(),
            Failure {
                factor: Some(0),
                reason: FailureReason::WrongCycleLength { length: 2 }
            }
        );
    }

    #[test]
    fn mixed_lengths_rejected_with_profile() {
        let host = complete_symmetric(5).unwrap();
        let fs = [factor(&[&[0, 1], &[2, 3, 4]])];
        let v = verify_factors(&host, &fs, None);
        assert_eq!(
            v.first_failure.unwrap(),
            Failure {
                factor: Some(0),
                reason: FailureReason::MixedCycleLengths { lengths: vec![2, 3] }
            }
        );
    }
}
