//! Seeds and seed mutation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::quiver::{Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("{got} cluster variables for a quiver on {n} vertices")]
    VarCount { n: usize, got: usize },
    #[error("cluster variable {index} has {got} variables, expected {expected}")]
    VarArity {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("exchange relation at vertex {vertex} is not divisible: Laurent phenomenon violated")]
    LaurentViolation { vertex: usize },
}

/// A quiver together with one Laurent polynomial per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    quiver: Quiver,
    vars: Vec<LaurentPoly>,
}

impl Seed {
    /// The initial seed `(q, {x_1, ..., x_n})`.
    pub fn initial(quiver: Quiver) -> Self {
        let n = quiver.n();
        let vars = (0..n).map(|i| LaurentPoly::variable(n, i)).collect();
        Seed { quiver, vars }
    }

    pub fn new(quiver: Quiver, vars: Vec<LaurentPoly>) -> Result<Self, SeedError> {
        let n = quiver.n();
        if vars.len() != n {
            return Err(SeedError::VarCount { n, got: vars.len() });
        }
        for (i, v) in vars.iter().enumerate() {
            if v.nvars() != n {
                return Err(SeedError::VarArity {
                    index: i + 1,
                    expected: n,
                    got: v.nvars(),
                });
            }
        }
        Ok(Seed { quiver, vars })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vars(&self) -> &[LaurentPoly] {
        &self.vars
    }

    /// Cluster variable at vertex `k` (1-based).
    pub fn var(&self, k: usize) -> &LaurentPoly {
        &self.vars[k - 1]
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Right-hand side of the exchange relation at `k`: the product over
    /// arrows leaving `k` plus the product over arrows entering `k`.
    pub fn exchange_binomial(&self, k: usize) -> Result<LaurentPoly, SeedError> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(QuiverError::VertexOutOfRange { vertex: k, n }.into());
        }
        let mut out_prod = LaurentPoly::one(n);
        let mut in_prod = LaurentPoly::one(n);
        for j in 1..=n {
            let b = self.quiver.entry(k, j);
            if b > 0 {
                out_prod = &out_prod * &self.vars[j - 1].pow(b as u32);
            } else if b < 0 {
                in_prod = &in_prod * &self.vars[j - 1].pow((-b) as u32);
            }
        }
        Ok(out_prod + in_prod)
    }

    /// Mutation at vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed, SeedError> {
        let quiver = self.quiver.mutate(k)?;
        let numerator = self.exchange_binomial(k)?;
        let fresh = numerator
            .div_exact(&self.vars[k - 1])
            .map_err(|_| SeedError::LaurentViolation { vertex: k })?;
        let mut vars = self.vars.clone();
        vars[k - 1] = fresh;
        Ok(Seed { quiver, vars })
    }

    /// Applies a sequence of mutations in order.
    pub fn mutate_path(&self, path: &[usize]) -> Result<Seed, SeedError> {
        path.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Cluster variables sorted by their total order; two isomorphic seeds
    /// have equal keys.
    pub fn sorted_vars(&self) -> Vec<LaurentPoly> {
        let mut v = self.vars.clone();
        v.sort();
        v
    }

    /// Relabels vertex `i` as `perm[i - 1]`, moving its variable along.
    pub fn relabel(&self, perm: &[usize]) -> Result<Seed, SeedError> {
        let quiver = self.quiver.relabel(perm)?;
        let mut vars = self.vars.clone();
        for (i, &p) in perm.iter().enumerate() {
            vars[p - 1] = self.vars[i].clone();
        }
        Ok(Seed { quiver, vars })
    }
}

/// True iff some relabeling carries `s` onto `t`, quiver and variables alike.
/// Returns one such permutation (`perm[i - 1]` is the image of vertex `i`).
pub fn seed_isomorphism(s: &Seed, t: &Seed) -> Option<Vec<usize>> {
    let n = s.n();
    if t.n() != n {
        return None;
    }
    // candidates[i] = vertices of t carrying the same variable as vertex i of s
    let candidates: Vec<Vec<usize>> = s
        .vars
        .iter()
        .map(|v| (0..n).filter(|&j| &t.vars[j] == v).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    fn search(
        s: &Seed,
        t: &Seed,
        candidates: &[Vec<usize>],
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = image.len();
        if i == candidates.len() {
            return true;
        }
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            let consistent = image
                .iter()
                .enumerate()
                .all(|(p, &q)| s.quiver.entry(i + 1, p + 1) == t.quiver.entry(j + 1, q + 1));
            if !consistent {
                continue;
            }
            used[j] = true;
            image.push(j);
            if search(s, t, candidates, image, used) {
                return true;
            }
            image.pop();
            used[j] = false;
        }
        false
    }
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if search(s, t, &candidates, &mut image, &mut used) {
        Some(image.into_iter().map(|j| j + 1).collect())
    } else {
        None
    }
}

pub fn seeds_isomorphic(s: &Seed, t: &Seed) -> bool {
    seed_isomorphism(s, t).is_some()
}

impl Serialize for Seed {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("Seed", 2)?;
        st.serialize_field("quiver", &self.quiver)?;
        st.serialize_field("vars", &self.vars)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Seed {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            quiver: Quiver,
            vars: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(d)?;
        let n = raw.quiver.n();
        let vars = raw
            .vars
            .iter()
            .map(|v| LaurentPoly::from_wire(n, v))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Seed::new(raw.quiver, vars).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap()
    }

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::variable(n, i - 1)
    }

    #[test]
    fn a2_seed_sequence() {
        let s0 = Seed::initial(a2());
        let s1 = s0.mutate(1).unwrap();
        let one = LaurentPoly::one(2);
        assert_eq!(s1.quiver(), &Quiver::from_arrows(2, &[(2, 1, 1)]).unwrap());
        assert_eq!(s1.var(1), &(&one + &x(2, 2)).div_exact(&x(2, 1)).unwrap());
        assert_eq!(s1.var(1).to_string(), "(1 + x2)/x1");
        assert_eq!(s1.var(2), &x(2, 2));

        let s2 = s1.mutate(2).unwrap();
        assert_eq!(s2.quiver(), &a2());
        assert_eq!(s2.var(2).to_string(), "(1 + x1 + x2)/(x1*x2)");
    }

    #[test]
    fn a2_pentagon_closes_up_to_relabeling() {
        let s0 = Seed::initial(a2());
        let s5 = s0.mutate_path(&[1, 2, 1, 2, 1]).unwrap();
        assert_ne!(s5, s0);
        assert_eq!(seed_isomorphism(&s5, &s0), Some(vec![2, 1]));
    }

    #[test]
    fn mutation_is_involutive() {
        let s0 = Seed::initial(a2());
        for k in 1..=2 {
            assert_eq!(s0.mutate(k).unwrap().mutate(k).unwrap(), s0);
        }
    }

    #[test]
    fn isomorphism_examples() {
        let s = Seed::initial(a2());
        assert!(seeds_isomorphic(&s, &s));
        let reversed = Seed::initial(Quiver::from_arrows(2, &[(2, 1, 1)]).unwrap());
        assert!(!seeds_isomorphic(&s, &reversed));
        let swapped = s.relabel(&[2, 1]).unwrap();
        assert_eq!(seed_isomorphism(&s, &swapped), Some(vec![2, 1]));
    }

    #[test]
    fn a1_exchange_with_empty_products() {
        let s = Seed::initial(Quiver::empty(1));
        assert_eq!(s.mutate(1).unwrap().var(1).to_string(), "2/x1");
    }

    #[test]
    fn multiple_arrows_raise_powers() {
        let kronecker = Quiver::from_arrows(2, &[(1, 2, 2)]).unwrap();
        let s = Seed::initial(kronecker).mutate(1).unwrap();
        assert_eq!(s.var(1).to_string(), "(1 + x2^2)/x1");
    }

    #[test]
    fn errors() {
        let s = Seed::initial(a2());
        assert!(matches!(s.mutate(3), Err(SeedError::Quiver(_))));
        assert_eq!(
            Seed::new(a2(), vec![x(2, 1)]),
            Err(SeedError::VarCount { n: 2, got: 1 })
        );
        assert!(matches!(
            Seed::new(a2(), vec![x(2, 1), x(3, 2)]),
            Err(SeedError::VarArity { index: 2, .. })
        ));
        // a seed whose variables are not a cluster can fail divisibility
        let bad = Seed::new(a2(), vec![&x(2, 1) + &LaurentPoly::one(2), x(2, 2)]).unwrap();
        assert_eq!(bad.mutate(1), Err(SeedError::LaurentViolation { vertex: 1 }));
    }

    #[test]
    fn json_round_trip() {
        let s = Seed::initial(a2()).mutate(1).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"quiver":{"n":2,"arrows":[[2,1,1]]},"vars":[[{"coeff":"1","exps":[-1,0]},{"coeff":"1","exps":[-1,1]}],[{"coeff":"1","exps":[0,1]}]]}"#
        );
        let back: Seed = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
