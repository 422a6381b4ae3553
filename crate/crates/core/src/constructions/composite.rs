use crate::atlas::Atlas;
use crate::constructions::gadgets::{blowup_cycle_factorization, gamma_factorization, BlowupTarget};
use crate::digraph::{complete_symmetric, Vertex};
use crate::error::{Error, Result};
use crate::model::{DirectedCycle, Factorization, ProblemSpec, TwoFactor};
use crate::search::Budget;

/// Carries a gadget on `Z_2 × Z_L` onto the blow-up of one `L`-cycle:
/// `(level, position)` goes to `2·c[position] + level`.
fn lift(gadget: &Factorization, c: &DirectedCycle) -> Result<Vec<TwoFactor>> {
    let l = c.len();
    let map = |z: Vertex| 2 * c.vertices()[z % l] + z / l;
    gadget.factors().iter().map(|f| f.map(map)).collect()
}

fn join_all(per_cycle: Vec<Vec<TwoFactor>>) -> Vec<TwoFactor> {
    let k = per_cycle.first().map_or(0, Vec::len);
    (0..k)
        .map(|j| {
            per_cycle
                .iter()
                .skip(1)
                .fold(per_cycle[0][j].clone(), |acc, p| acc.join(&p[j]))
        })
        .collect()
}

/// Splits `F ≀ K̄_2` into two factors for a factor `F` of even-length
/// cycles, with vertex `(b, t)` written `2b + t`.
pub fn blow_up_factor(f: &TwoFactor, target: BlowupTarget) -> Result<Vec<TwoFactor>> {
    let per_cycle = f
        .cycles()
        .iter()
        .map(|c| lift(&blowup_cycle_factorization(c.len(), target)?, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(join_all(per_cycle))
}

/// Splits `(F ≀ K̄_2) ⊕ digons {2b, 2b+1}` into `{C_L^1, C_2L^2}`.
fn blow_up_gamma(f: &TwoFactor) -> Result<Vec<TwoFactor>> {
    let per_cycle = f
        .cycles()
        .iter()
        .map(|c| lift(&gamma_factorization(c.len())?, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(join_all(per_cycle))
}

/// `HWP*(16; 8^r, 16^s)` for odd `r ≤ 13` from a `C_8`-factorization of
/// `K_8*`: one factor becomes `Γ_8`, `(r−1)/2` others split into `C_8`
/// pairs and the rest into `C_16` pairs.
pub fn composite_16_8_16(r: usize, s: usize, atlas: &Atlas, budget: Budget) -> Result<Factorization> {
    if r.is_multiple_of(2) || r + s != 15 || r > 13 {
        return Err(Error::InvalidParameter(format!(
            "composite order 16 needs odd r <= 13 with r+s=15, got r={r}, s={s}"
        )));
    }
    let spec = ProblemSpec::new(16, 8, 16, r, s)?;
    let k8 = atlas.factorization(&ProblemSpec::new(8, 4, 8, 0, 7)?, budget)?;
    let r0 = (r - 1) / 2;
    let mut factors = blow_up_gamma(&k8.factors()[0])?;
    for (i, f) in k8.factors()[1..].iter().enumerate() {
        let target = if i < r0 {
            BlowupTarget::Same
        } else {
            BlowupTarget::Double
        };
        factors.extend(blow_up_factor(f, target)?);
    }
    Factorization::new(complete_symmetric(16)?, factors).checked(Some(&spec.profile()), "composite order 16")
}
