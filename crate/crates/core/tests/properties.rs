mod oracle;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use pfhanoi_core::bijection::{self, BijectionRecord};
use pfhanoi_core::enumeration::{self, EnumerationBudget};
use pfhanoi_core::hanoi::{self, HanoiMove, HanoiState, IdealStateWitness};
use pfhanoi_core::parking::{self, ParkingOutcome, PreferenceVector};
use pfhanoi_core::search::{self, SearchBudget};
use proptest::prelude::*;

fn pv(v: Vec<u32>) -> PreferenceVector {
    PreferenceVector::new(v).unwrap()
}

#[test]
fn park_agrees_with_free_set_oracle() {
    for n in 1..=6 {
        for v in oracle::all_vectors(n, 1, n as u32) {
            let outcome = parking::park(&pv(v.clone()));
            match (oracle::park(&v), &outcome) {
                (Ok(spots), ParkingOutcome::Parked(p)) => {
                    assert_eq!(p.assignment(), spots.as_slice(), "{v:?}");
                    let lucky = p.displacements().iter().filter(|&&k| k == 0).count();
                    let unlucky = p.displacements().iter().filter(|&&k| k >= 1).count();
                    assert_eq!(p.lucky_count(), lucky);
                    assert_eq!(lucky + unlucky, n);
                    assert_eq!(
                        p.total_displacement(),
                        p.displacements().iter().map(|&k| u64::from(k)).sum::<u64>()
                    );
                }
                (Err(car), ParkingOutcome::Failed { car: got }) => assert_eq!(car, *got, "{v:?}"),
                (expected, got) => panic!("{v:?}: oracle {expected:?}, library {got:?}"),
            }
        }
    }
}

#[test]
fn sorted_criterion_agrees_with_simulation() {
    for n in 1..=6 {
        for v in oracle::all_vectors(n, 1, n as u32) {
            let alpha = pv(v.clone());
            let simulated = parking::is_parking_function(&alpha);
            assert_eq!(
                simulated,
                parking::satisfies_sorted_criterion(&alpha),
                "{v:?}"
            );
            assert_eq!(simulated, oracle::counting_criterion(&v), "{v:?}");
        }
    }
}

#[test]
fn displacement_zero_iff_permutation() {
    for n in 1..=6 {
        for v in oracle::all_vectors(n, 1, n as u32) {
            let alpha = pv(v.clone());
            let is_perm = v.iter().collect::<BTreeSet<_>>().len() == n;
            assert_eq!(parking::displacement(&alpha) == Ok(0), is_perm, "{v:?}");
            assert_eq!(alpha.is_permutation(), is_perm);
        }
    }
}

#[test]
fn structural_displacement_one_matches_simulation() {
    for n in 1..=6 {
        for v in oracle::all_vectors(n, 1, n as u32) {
            let structural = parking::is_displacement_one_characterized(&pv(v.clone()));
            let simulated = oracle::displacement(&v) == Some(1);
            assert_eq!(structural, simulated, "{v:?}");
        }
    }
}

#[test]
fn partition_by_displacement() {
    let budget = EnumerationBudget::default();
    for n in 1..=6u64 {
        let dist = enumeration::displacement_distribution(n as usize, budget).unwrap();
        let max = (n * (n - 1) / 2) as usize;
        assert_eq!(dist.len(), max + 1);
        assert_eq!(
            BigUint::from(dist.iter().sum::<u64>()),
            enumeration::cayley_count(n as usize)
        );
        assert_eq!(dist[0], oracle::factorial(n));
        assert_eq!(dist[max], 1);
        let all_ones = vec![1; n as usize];
        assert_eq!(oracle::displacement(&all_ones), Some(max as u64));
    }
}

#[test]
fn constructive_displacement_one_equals_filter() {
    let budget = EnumerationBudget::default();
    for n in 1..=6 {
        let built = enumeration::construct_displacement_one(n);
        let filtered: Vec<_> = enumeration::enumerate_pf_displacement(n, 1, budget)
            .unwrap()
            .collect();
        assert_eq!(built, filtered, "n = {n}");
    }
}

#[test]
fn enumerations_are_lexicographic_and_cayley_sized() {
    let budget = EnumerationBudget::default();
    for n in 1..=6 {
        let pf: Vec<_> = enumeration::enumerate_pf(n, budget).unwrap().collect();
        assert!(pf.windows(2).all(|w| w[0] < w[1]));
        let expected: Vec<Vec<u32>> = oracle::all_vectors(n, 1, n as u32)
            .into_iter()
            .filter(|v| oracle::park(v).is_ok())
            .collect();
        let got: Vec<Vec<u32>> = pf.into_iter().map(PreferenceVector::into_vec).collect();
        assert_eq!(got, expected);
        assert_eq!(BigUint::from(got.len()), enumeration::cayley_count(n));
    }
}

#[test]
fn ideal_predicate_matches_board_reading() {
    for n in 2..=4 {
        for v in oracle::all_vectors(n + 1, 0, n as u32) {
            let s = HanoiState::new(v.clone()).unwrap();
            assert_eq!(
                hanoi::is_ideal_state(&s),
                oracle::is_ideal_by_board(&v),
                "{v:?}"
            );
        }
    }
}

#[test]
fn ideal_enumeration_complete_and_sound() {
    for n in 2..=4 {
        let expected: Vec<HanoiState> = oracle::all_vectors(n + 1, 0, n as u32)
            .into_iter()
            .filter(|v| oracle::is_ideal_by_board(v))
            .map(|v| HanoiState::new(v).unwrap())
            .collect();
        assert_eq!(hanoi::enumerate_ideal_states(n).unwrap(), expected);
        let filtered: Vec<_> = enumeration::filter_ideal_states(n).unwrap().collect();
        assert_eq!(filtered, expected);
    }
    for n in 2..=8u64 {
        let states = hanoi::enumerate_ideal_states(n as usize).unwrap();
        assert_eq!(states.len() as u64, oracle::factorial(n) * (n - 1) / 2);
        assert!(states.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn legal_moves_match_stack_oracle_and_reverse() {
    for n in 2..=3 {
        for v in oracle::all_vectors(n + 1, 0, n as u32) {
            let s = HanoiState::new(v.clone()).unwrap();
            let moves = hanoi::legal_moves(&s);
            let got: Vec<(u32, u32, u32)> = moves.iter().map(|m| (m.disk, m.from, m.to)).collect();
            assert_eq!(got, oracle::moves(&v), "{v:?}");
            for m in moves {
                let t = hanoi::apply_move(&s, m).unwrap();
                assert_eq!(
                    t.pegs(),
                    oracle::step(&v, (m.disk, m.from, m.to)).as_slice()
                );
                assert!(hanoi::is_legal(&t, m.reversed()));
                assert_eq!(hanoi::apply_move(&t, m.reversed()).unwrap(), s);
            }
        }
    }
}

#[test]
fn bfs_matches_hash_map_oracle() {
    for n in 2..=4usize {
        let start = vec![0; n + 1];
        let end = vec![n as u32; n + 1];
        let dist = oracle::distances(start);
        // the state graph is connected
        assert_eq!(dist.len(), (n + 1).pow(n as u32 + 1));
        assert_eq!(
            search::shortest_win_length(n, SearchBudget::default()).unwrap(),
            dist[&end]
        );
        assert_eq!(dist[&end] as usize, 2 * n + 3);
    }
}

#[test]
fn ideal_layer_against_path_enumeration() {
    for n in 2..=3usize {
        let start = vec![0; n + 1];
        let end = vec![n as u32; n + 1];
        let paths = oracle::all_shortest_paths(&start, &end);
        let report = search::optimal_strategies_through_ideal(n, SearchBudget::default()).unwrap();
        assert_eq!(report.shortest_wins, BigUint::from(paths.len()));
        for path in &paths {
            let ideal_at: Vec<usize> = path
                .iter()
                .enumerate()
                .filter(|(_, s)| oracle::is_ideal_by_board(s))
                .map(|(i, _)| i)
                .collect();
            assert_eq!(ideal_at, vec![n + 1]);
        }
        assert!(report.passed());
    }
}

#[test]
fn solved_games_replay() {
    for n in 2..=5 {
        let strategy = search::solve(n, SearchBudget::default()).unwrap();
        assert_eq!(strategy.len(), 2 * n + 3);
        assert!(strategy.is_win());
        assert_eq!(strategy.ideal_moves(), vec![n + 1]);
        let mut state = vec![0; n + 1];
        for (i, m) in strategy.moves().iter().enumerate() {
            assert!(oracle::moves(&state).contains(&(m.disk, m.from, m.to)));
            state = oracle::step(&state, (m.disk, m.from, m.to));
            assert_eq!(strategy.states()[i + 1].pegs(), state.as_slice());
        }
    }
    assert!(search::Strategy::from_moves(3, vec![HanoiMove::new(2, 0, 1)]).is_err());
}

#[test]
fn bijection_round_trips_and_image() {
    let budget = EnumerationBudget::default();
    for n in 2..=7 {
        let ideal = hanoi::enumerate_ideal_states(n).unwrap();
        let mut image = Vec::new();
        for x in &ideal {
            let record = BijectionRecord::from_ideal(x.clone()).unwrap();
            assert!(parking::is_displacement_one_characterized(&record.pf));
            let repeated = record
                .pf
                .as_slice()
                .iter()
                .copied()
                .find(|&a| record.pf.as_slice().iter().filter(|&&b| b == a).count() == 2);
            assert_eq!(repeated, Some(record.j));
            assert_eq!(&bijection::pf_to_th(&record.pf).unwrap(), x);
            image.push(record.pf);
        }
        image.sort();
        image.dedup();
        assert_eq!(image.len(), ideal.len());
        if n <= 6 {
            let simulated: Vec<PreferenceVector> = oracle::all_vectors(n, 1, n as u32)
                .into_iter()
                .filter(|v| oracle::displacement(v) == Some(1))
                .map(pv)
                .collect();
            assert_eq!(image, simulated, "n = {n}");
        }
        for alpha in enumeration::construct_displacement_one(n) {
            let x = bijection::pf_to_th(&alpha).unwrap();
            assert_eq!(bijection::th_to_pf(&x).unwrap(), alpha);
        }
        assert!(bijection::verify_bijection(n, budget).unwrap().passed());
    }
}

fn ideal_state_strategy() -> impl Strategy<Value = HanoiState> {
    (3usize..=12).prop_flat_map(|n| {
        (
            1..n as u32,
            Just(n),
            proptest::sample::subsequence((0..n as u32).collect::<Vec<_>>(), 2),
            Just((0..n as u32 - 2).collect::<Vec<u32>>()).prop_shuffle(),
        )
            .prop_map(|(j, n, pair, order)| {
                let rest: Vec<u32> = (0..n as u32).filter(|d| !pair.contains(d)).collect();
                let pegs: Vec<u32> = (1..n as u32).filter(|&p| p != j).collect();
                IdealStateWitness {
                    doubled_peg: j,
                    doubled_disks: (pair[0], pair[1]),
                    singletons: rest
                        .into_iter()
                        .zip(order.iter().map(|&o| pegs[o as usize]))
                        .collect(),
                }
                .to_state(n)
            })
    })
}

proptest! {
    #[test]
    fn parking_outcome_invariants(v in (1usize..=14).prop_flat_map(|n| proptest::collection::vec(1..=n as u32, n))) {
        let alpha = pv(v.clone());
        match parking::park(&alpha) {
            ParkingOutcome::Parked(p) => {
                prop_assert_eq!(oracle::park(&v), Ok(p.assignment().to_vec()));
                let spots: BTreeSet<u32> = p.assignment().iter().copied().collect();
                prop_assert_eq!(spots, (1..=v.len() as u32).collect::<BTreeSet<_>>());
                for (i, &k) in p.displacements().iter().enumerate() {
                    prop_assert_eq!(k, p.assignment()[i] - v[i]);
                }
            }
            ParkingOutcome::Failed { car } => prop_assert_eq!(oracle::park(&v), Err(car)),
        }
    }

    #[test]
    fn random_ideal_states_round_trip(x in ideal_state_strategy()) {
        prop_assert!(oracle::is_ideal_by_board(x.pegs()));
        let alpha = bijection::th_to_pf(&x).unwrap();
        prop_assert_eq!(oracle::displacement(alpha.as_slice()), Some(1));
        prop_assert_eq!(bijection::pf_to_th(&alpha).unwrap(), x);
    }

    #[test]
    fn non_ideal_states_are_rejected(v in (2usize..=6).prop_flat_map(|n| proptest::collection::vec(0..=n as u32, n + 1))) {
        let s = HanoiState::new(v.clone()).unwrap();
        prop_assert_eq!(bijection::th_to_pf(&s).is_ok(), oracle::is_ideal_by_board(&v));
    }

    #[test]
    fn reachable_states_stay_valid(n in 2usize..=6, picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..60)) {
        let mut s = hanoi::starting_state(n).unwrap();
        for pick in picks {
            let moves = hanoi::legal_moves(&s);
            let m = moves[pick.index(moves.len())];
            s = hanoi::apply_move(&s, m).unwrap();
            prop_assert!(HanoiState::new(s.pegs().to_vec()).is_ok());
        }
    }
}
