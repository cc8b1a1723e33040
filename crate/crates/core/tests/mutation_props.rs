use cfw_core::quiver::Quiver;
use cfw_core::seed::{Seed, SeedError};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Entrywise mutation rule on the exchange matrix, written out directly.
fn matrix_rule(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
            };
        }
    }
    out
}

fn random_acyclic(rng: &mut ChaCha8Rng, n: usize) -> Quiver {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut arrows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                let m = if rng.gen_bool(0.85) { 1 } else { 2 };
                arrows.push((order[a], order[b], m));
            }
        }
    }
    Quiver::from_arrows(n, &arrows).unwrap()
}

fn skew_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |upper| {
            let mut b = vec![vec![0; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = it.next().unwrap();
                    b[i][j] = v;
                    b[j][i] = -v;
                }
            }
            b
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mutation_matches_matrix_rule(b in skew_matrix(), k in 0usize..6) {
        let n = b.len();
        let k = k % n;
        let q = Quiver::from_matrix(&b).unwrap();
        let m = q.mutate(k + 1).unwrap();
        prop_assert_eq!(m.matrix(), matrix_rule(&b, k));
    }

    #[test]
    fn mutation_is_an_involution(b in skew_matrix(), k in 0usize..6) {
        let n = b.len();
        let k = k % n + 1;
        let q = Quiver::from_matrix(&b).unwrap();
        prop_assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
    }

    #[test]
    fn relabeling_commutes_with_mutation(b in skew_matrix(), k in 0usize..6, seed in any::<u64>()) {
        let n = b.len();
        let k = k % n + 1;
        let q = Quiver::from_matrix(&b).unwrap();
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let left = q.mutate(k).unwrap().relabel(&perm).unwrap();
        let right = q.relabel(&perm).unwrap().mutate(perm[k - 1]).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn canonical_form_is_relabel_invariant(b in skew_matrix(), seed in any::<u64>()) {
        let n = b.len();
        let q = Quiver::from_matrix(&b).unwrap();
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let (c, p) = q.canonical_form().unwrap();
        prop_assert_eq!(&c, &q.relabel(&perm).unwrap().canonical_form().unwrap().0);
        prop_assert_eq!(q.relabel(&p).unwrap(), c);
    }
}

#[test]
fn sink_and_source_mutation_preserves_acyclicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let q = random_acyclic(&mut rng, n);
        let (sinks, sources) = q.sinks_sources();
        assert!(!sinks.is_empty() && !sources.is_empty());
        for k in sinks.into_iter().chain(sources) {
            let m = q.mutate(k).unwrap();
            assert!(m.is_acyclic(), "{} at {k}", q.describe());
            let (si, so) = m.sinks_sources();
            assert!(si.contains(&k) || so.contains(&k));
        }
    }
}

#[test]
fn seed_mutation_is_an_involution() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let q = random_acyclic(&mut rng, n);
        let word: Vec<usize> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(1..=n)).collect();
        let s = Seed::initial(q).mutate_path(&word).unwrap();
        let k = rng.gen_range(1..=n);
        assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
    }
}

#[test]
fn exchange_identity_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let s = Seed::initial(random_acyclic(&mut rng, n));
        let k = rng.gen_range(1..=n);
        let t = s.mutate(k).unwrap();
        assert_eq!(&(s.var(k) * t.var(k)), &s.exchange_binomial(k).unwrap());
    }
}

#[test]
fn laurent_phenomenon_and_positivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let q = random_acyclic(&mut rng, n);
        let word: Vec<usize> = (0..rng.gen_range(0..=8)).map(|_| rng.gen_range(1..=n)).collect();
        let mut s = Seed::initial(q);
        for &k in &word {
            s = match s.mutate(k) {
                Ok(t) => t,
                Err(SeedError::LaurentViolation { vertex }) => panic!("not Laurent at {vertex} after {word:?}"),
                Err(e) => panic!("{e}"),
            };
        }
        for v in s.vars() {
            assert!(v.eval_at_ones() > BigInt::from(0));
            assert!(v.has_nonnegative_coefficients());
        }
    }
}
