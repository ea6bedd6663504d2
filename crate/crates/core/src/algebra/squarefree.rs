use super::{poly_gcd, AlgebraError, Poly};

/// Yun's squarefree decomposition.
///
/// Returns `[(q_i, m_i)]` with `p = lc(p)·∏ q_i^{m_i}`, every `q_i` monic,
/// squarefree, non-constant and pairwise coprime, and `m_i` strictly
/// increasing. Constants decompose to the empty list.
pub fn squarefree_decompose(p: &Poly) -> Result<Vec<(Poly, u32)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial("squarefree_decompose"));
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while !b.is_constant() {
        let a = poly_gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct monic irreducible factors.
pub(crate) fn squarefree_part(p: &Poly) -> Poly {
    if p.is_constant() {
        return Poly::one();
    }
    p.div_rem(&poly_gcd(p, &p.derivative())).0.monic()
}
