//! The (k, l)-pullback parking rule on a one-way street.
//!
//! Cars arrive in order. A car takes its preferred spot if it is free.
//! Otherwise it looks back up to `k` spots, nearest first, stopping at the
//! start of the street; then it looks forward up to `l` spots past its
//! preference, stopping at the end of the street. The first vacancy wins.
//! A car that finds none ends the process.
//!
//! The contained variant adds a vacant spot 0 in front of spot 1. It is never
//! preferred, but a backward scan can reach it; a car that would park there
//! violates containment.

use serde::Serialize;

use crate::error::Result;
use crate::types::{OutcomeWord, Params, PreferenceList};

/// Where a car finished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParkedAt {
    /// A real spot in `1..=n`.
    Spot(usize),
    /// The virtual spot 0 of a contained street.
    VirtualSpot,
    Failed,
}

/// Step-by-step record of one car.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CarTrace {
    pub car: usize,
    pub preferred: usize,
    /// Occupied-or-not spots looked at behind the preference, nearest first.
    pub backward_checked: Vec<usize>,
    pub forward_checked: Vec<usize>,
    pub parked_at: ParkedAt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "car", rename_all = "snake_case")]
pub enum Status {
    Success,
    /// The given car found no vacancy; later cars never entered.
    FailAt(usize),
    /// The given car backed into the virtual spot 0.
    ContainmentViolation(usize),
}

impl Status {
    pub fn is_success(self) -> bool {
        matches!(self, Status::Success)
    }

    /// The car that stopped the process, if any.
    pub fn stopped_by(self) -> Option<usize> {
        match self {
            Status::Success => None,
            Status::FailAt(c) | Status::ContainmentViolation(c) => Some(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimulationResult {
    pub status: Status,
    pub traces: Vec<CarTrace>,
    /// Present exactly when `status` is [`Status::Success`].
    pub outcome: Option<OutcomeWord>,
}

/// Runs the pullback rule with full traces.
pub fn simulate(prefs: &PreferenceList, params: &Params) -> Result<SimulationResult> {
    let prefs = PreferenceList::for_params(prefs.as_slice().to_vec(), params)?;
    Ok(run_traced(
        prefs.as_slice(),
        params.n,
        params.k,
        params.l,
        false,
    ))
}

/// `true` iff every car parks under the pullback rule.
pub fn is_pullback_pf(prefs: &PreferenceList, params: &Params) -> Result<bool> {
    PreferenceList::for_params(prefs.as_slice().to_vec(), params)?;
    let mut street = vec![0; params.n + 1];
    Ok(drive(
        prefs.as_slice(),
        params.n,
        params.k,
        params.l,
        false,
        &mut street,
        None,
    )
    .is_success())
}

/// Runs the rule for `cars` cars on `spots` spots plus a vacant spot 0.
pub fn simulate_contained(
    prefs: &PreferenceList,
    cars: usize,
    spots: usize,
    k: usize,
    l: usize,
) -> Result<SimulationResult> {
    let prefs =
        PreferenceList::for_params(prefs.as_slice().to_vec(), &Params::new(cars, spots, k, l))?;
    Ok(run_traced(prefs.as_slice(), spots, k, l, true))
}

/// `true` iff every car parks in `1..=spots` without backing into spot 0.
pub fn is_contained_pf(
    prefs: &PreferenceList,
    cars: usize,
    spots: usize,
    k: usize,
    l: usize,
) -> Result<bool> {
    PreferenceList::for_params(prefs.as_slice().to_vec(), &Params::new(cars, spots, k, l))?;
    let mut street = vec![0; spots + 1];
    Ok(drive(prefs.as_slice(), spots, k, l, true, &mut street, None).is_success())
}

fn run_traced(prefs: &[usize], n: usize, k: usize, l: usize, contained: bool) -> SimulationResult {
    let mut street = vec![0; n + 1];
    let mut traces = Vec::with_capacity(prefs.len());
    let status = drive(prefs, n, k, l, contained, &mut street, Some(&mut traces));
    let outcome = status
        .is_success()
        .then(|| OutcomeWord::from_raw(street[1..].to_vec()));
    SimulationResult {
        status,
        traces,
        outcome,
    }
}

/// Parks `prefs` on `street` (index 0 is the virtual spot, `1..=n` real).
///
/// `street` must be all zeros on entry; on success it holds the outcome.
/// Preferences are assumed valid.
pub(crate) fn drive(
    prefs: &[usize],
    n: usize,
    k: usize,
    l: usize,
    contained: bool,
    street: &mut [usize],
    mut log: Option<&mut Vec<CarTrace>>,
) -> Status {
    debug_assert_eq!(street.len(), n + 1);
    let lowest = if contained { 0 } else { 1 };
    for (idx, &pref) in prefs.iter().enumerate() {
        let car = idx + 1;
        let mut backward = Vec::new();
        let mut forward = Vec::new();
        let mut parked = ParkedAt::Failed;

        if street[pref] == 0 {
            parked = ParkedAt::Spot(pref);
        } else {
            let back_stop = pref.saturating_sub(k).max(lowest);
            for spot in (back_stop..pref).rev() {
                if log.is_some() {
                    backward.push(spot);
                }
                if street[spot] == 0 {
                    parked = if spot == 0 {
                        ParkedAt::VirtualSpot
                    } else {
                        ParkedAt::Spot(spot)
                    };
                    break;
                }
            }
            if parked == ParkedAt::Failed {
                let fwd_stop = pref.saturating_add(l).min(n);
                let ahead = street.iter().enumerate().take(fwd_stop + 1).skip(pref + 1);
                for (spot, &occupant) in ahead {
                    if log.is_some() {
                        forward.push(spot);
                    }
                    if occupant == 0 {
                        parked = ParkedAt::Spot(spot);
                        break;
                    }
                }
            }
        }

        if let Some(log) = log.as_deref_mut() {
            log.push(CarTrace {
                car,
                preferred: pref,
                backward_checked: backward,
                forward_checked: forward,
                parked_at: parked,
            });
        }
        match parked {
            ParkedAt::Spot(spot) => street[spot] = car,
            ParkedAt::VirtualSpot => return Status::ContainmentViolation(car),
            ParkedAt::Failed => return Status::FailAt(car),
        }
    }
    Status::Success
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prefs(v: &[usize], n: usize) -> PreferenceList {
        PreferenceList::new(v.to_vec(), n).unwrap()
    }

    fn outcome(v: &[usize]) -> OutcomeWord {
        OutcomeWord::new(v.to_vec()).unwrap()
    }

    #[test]
    fn third_car_backs_up_then_pulls_forward() {
        let p = Params::new(4, 5, 1, 2);
        let r = simulate(&prefs(&[3, 2, 3, 1], 5), &p).unwrap();
        assert_eq!(r.status, Status::Success);
        assert_eq!(r.outcome, Some(outcome(&[4, 2, 1, 3, 0])));
        // car 3 finds 3 and 2 taken (k=1) and pulls forward to 4
        assert_eq!(r.traces[2].backward_checked, vec![2]);
        assert_eq!(r.traces[2].forward_checked, vec![4]);
        assert_eq!(r.traces[2].parked_at, ParkedAt::Spot(4));
    }

    #[test]
    fn car_four_fails() {
        let p = Params::new(4, 5, 1, 2);
        let r = simulate(&prefs(&[3, 2, 2, 1], 5), &p).unwrap();
        assert_eq!(r.status, Status::FailAt(4));
        assert_eq!(r.outcome, None);
        let last = r.traces.last().unwrap();
        assert!(last.backward_checked.is_empty());
        assert_eq!(last.forward_checked, vec![2, 3]);
        assert_eq!(last.parked_at, ParkedAt::Failed);
    }

    #[test]
    fn interval_example_fails() {
        let r = simulate(&prefs(&[1, 1, 1], 3), &Params::new(3, 3, 0, 1)).unwrap();
        assert_eq!(r.status, Status::FailAt(3));
    }

    #[test]
    fn classical_outcomes() {
        let p = Params::classical(8, 8);
        let r = simulate(&prefs(&[1, 1, 1, 2, 4, 4, 5, 7], 8), &p).unwrap();
        assert_eq!(r.outcome, Some(outcome(&[1, 2, 3, 4, 5, 6, 7, 8])));
        let r = simulate(&prefs(&[7, 1, 5, 2, 4, 1, 4, 1], 8), &p).unwrap();
        assert_eq!(r.outcome, Some(outcome(&[2, 4, 6, 5, 3, 7, 1, 8])));
    }

    #[test]
    fn membership_examples() {
        assert!(is_pullback_pf(&prefs(&[3, 2, 3, 1], 5), &Params::new(4, 5, 1, 2)).unwrap());
        assert!(is_pullback_pf(&prefs(&[1, 4, 3, 2], 4), &Params::new(4, 4, 0, 3)).unwrap());
        assert!(!is_pullback_pf(&prefs(&[1, 4, 4], 4), &Params::new(3, 4, 0, 3)).unwrap());
    }

    #[test]
    fn malformed_input_is_an_error_not_a_failure() {
        let p = Params::new(2, 3, 0, 0);
        assert!(simulate(&prefs(&[1, 2, 3], 3), &p).is_err());
        assert!(simulate(&prefs(&[1, 3], 3), &Params::new(2, 2, 0, 0)).is_err());
        assert!(is_contained_pf(&prefs(&[3], 3), 1, 2, 0, 0).is_err());
    }

    #[test]
    fn contained_examples() {
        let r = simulate_contained(&prefs(&[1, 1], 2), 2, 2, 1, 1).unwrap();
        assert_eq!(r.status, Status::ContainmentViolation(2));
        assert_eq!(r.traces[1].backward_checked, vec![0]);
        assert_eq!(r.traces[1].parked_at, ParkedAt::VirtualSpot);

        let r = simulate_contained(&prefs(&[2, 2], 2), 2, 2, 1, 1).unwrap();
        assert_eq!(r.status, Status::Success);
        assert_eq!(r.outcome, Some(outcome(&[2, 1])));

        assert!(is_contained_pf(&prefs(&[1, 2], 2), 2, 2, 1, 1).unwrap());
        assert!(!is_contained_pf(&prefs(&[1, 1], 2), 2, 2, 1, 1).unwrap());
    }

    #[test]
    fn single_car_always_parks_contained() {
        for b in 1..5 {
            for p in 1..=b {
                for k in 0..4 {
                    assert!(is_contained_pf(&prefs(&[p], b), 1, b, k, 0).unwrap());
                }
            }
        }
    }

    #[test]
    fn no_cars_is_success() {
        let r = simulate(&prefs(&[], 4), &Params::new(0, 4, 2, 2)).unwrap();
        assert_eq!(r.status, Status::Success);
        assert_eq!(r.outcome, Some(outcome(&[0, 0, 0, 0])));
        assert!(r.traces.is_empty());
    }

    #[test]
    fn failure_stops_processing() {
        let r = simulate(&prefs(&[1, 1, 1, 1], 4), &Params::new(4, 4, 0, 0)).unwrap();
        assert_eq!(r.status, Status::FailAt(2));
        assert_eq!(r.traces.len(), 2);
    }

    #[test]
    fn huge_allowances_are_semantic() {
        let a = simulate(
            &prefs(&[2, 2, 2], 3),
            &Params::new(3, 3, usize::MAX, usize::MAX),
        )
        .unwrap();
        let b = simulate(&prefs(&[2, 2, 2], 3), &Params::new(3, 3, 2, 2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.outcome, Some(outcome(&[2, 1, 3])));
    }
}
