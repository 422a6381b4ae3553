use crate::digraph::{complete_symmetric, wreath_with_empty, Vertex};
use crate::error::{Error, Result};
use crate::model::{Factorization, TwoFactor, UndirectedFactor, UndirectedTwoFactorization};

/// Round-robin 1-factorization of `K_n` for even `n`.
///
/// The points `∞, 0, …, n−2` are relabeled `∞ ↦ 0`, `0 ↦ 1`, `k ↦ 2k`,
/// `−k ↦ 2k+1`, so the first matching is `{2i, 2i+1}`.
pub fn kotzig_one_factorization(n: usize) -> Result<UndirectedTwoFactorization> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "1-factorization needs even n >= 2, got {n}"
        )));
    }
    let q = n - 1;
    let half = (n - 2) / 2;
    let label = |p: Option<usize>| -> Vertex {
        match p {
            None => 0,
            Some(0) => 1,
            Some(k) if k <= half => 2 * k,
            Some(k) => 2 * (q - k) + 1,
        }
    };
    let factors = (0..q)
        .map(|k| {
            let mut edges = vec![[label(None), label(Some(k))]];
            for j in 1..=half {
                edges.push([label(Some((k + q - j) % q)), label(Some((k + j) % q))]);
            }
            UndirectedFactor::from_sequences(edges)
        })
        .collect::<Result<Vec<_>>>()?;
    UndirectedTwoFactorization::new(complete_symmetric(n)?, factors)?.checked(None, "round-robin")
}

/// The `2x−2` digon factors of `K_x* ≀ K̄_2 = K_{2x}* − xK_2*`, where
/// vertex `(b, t)` is `2b + t`.
pub fn pair_blowup_k2_factors(x: usize) -> Result<Factorization> {
    if x < 2 {
        return Err(Error::InvalidParameter(format!("pair blow-up needs x >= 2, got {x}")));
    }
    let one = kotzig_one_factorization(2 * x)?;
    let factors = one.factors()[1..]
        .iter()
        .map(|f| TwoFactor::new(f.cycles().iter().map(|c| c.orientations().0).collect()))
        .collect();
    let host = wreath_with_empty(&complete_symmetric(x)?, 2)?;
    Factorization::new(host, factors).checked(None, "pair blow-up")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::CycleProfile;

    #[test]
    fn k4_is_the_unique_factorization() {
        let k = kotzig_one_factorization(4).unwrap();
        let text: Vec<String> = k.factors().iter().map(|f| f.to_string()).collect();
        assert_eq!(text, ["[0,1][2,3]", "[0,2][1,3]", "[0,3][1,2]"]);
    }

    #[test]
    fn first_factor_is_the_pairing() {
        for n in (2..=20).step_by(2) {
            let k = kotzig_one_factorization(n).unwrap();
            assert_eq!(k.len(), n - 1);
            let pairing = UndirectedFactor::from_sequences((0..n / 2).map(|i| [2 * i, 2 * i + 1])).unwrap();
            assert_eq!(k.factors()[0], pairing);
        }
        assert!(kotzig_one_factorization(5).is_err());
    }

    #[test]
    fn blowup_factors_cover_the_wreath() {
        for x in [2, 3, 6] {
            let f = pair_blowup_k2_factors(x).unwrap();
            assert_eq!(f.len(), 2 * x - 2);
            assert!(f.verify(Some(&CycleProfile::single(2, 2 * x - 2))).valid);
        }
        assert_eq!(pair_blowup_k2_factors(3).unwrap().host().arc_count(), 24);
        assert!(pair_blowup_k2_factors(1).is_err());
    }
}
