use crate::error::{Error, Result};
use crate::model::{Factorization, TwoFactor, UndirectedTwoFactorization};

/// Replaces every edge by its two arcs.
///
/// A cycle factor yields two directed factors, one per orientation; a
/// perfect matching yields a single digon factor.
pub fn double_factorization(u: &UndirectedTwoFactorization) -> Result<Factorization> {
    let verdict = u.verify(None);
    if !verdict.valid {
        return Err(Error::InvalidParameter(format!("undirected input rejected: {verdict}")));
    }
    let mut factors = Vec::with_capacity(2 * u.len());
    for f in u.factors() {
        let digons = f.cycles().iter().filter(|c| c.len() == 2).count();
        if digons == f.cycles().len() {
            factors.push(TwoFactor::new(f.cycles().iter().map(|c| c.orientations().0).collect()));
        } else if digons == 0 {
            let (fwd, back): (Vec<_>, Vec<_>) = f.cycles().iter().map(|c| c.orientations()).unzip();
            factors.push(TwoFactor::new(fwd));
            factors.push(TwoFactor::new(back));
        } else {
            return Err(Error::UnsupportedShape(
                "factor mixes matching edges with longer cycles".into(),
            ));
        }
    }
    Factorization::new(u.host().clone(), factors).checked(None, "doubling")
}
