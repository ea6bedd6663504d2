use super::resultant::residue_resultant;
use super::{int, is_integer, poly_gcd, rational_roots, solve_bezout, squarefree_decompose};
use super::{Poly, Rat, RatFunc};

/// Hermite reduction: `r = h' + g` where `g` is proper with a squarefree
/// denominator.
///
/// The polynomial part of `r` is integrated into `h`, so `g` carries exactly
/// the simple poles of `r` and the residues of `r` and `g` coincide.
pub fn hermite_reduce(r: &RatFunc) -> (RatFunc, RatFunc) {
    let (poly_part, rem) = r.num().div_rem(r.den());
    let mut h = RatFunc::from_poly(poly_part.integral());
    let mut a = rem;
    let mut d = r.den().clone();
    if a.is_zero() {
        return (h, RatFunc::zero());
    }
    let factors = squarefree_decompose(&d).expect("denominator is nonzero");
    for (v, i) in factors.into_iter().filter(|(_, i)| *i >= 2) {
        let u = d.div_exact(&v.pow(i)).expect("squarefree factor divides");
        let uv = &u * &v.derivative();
        for j in (1..i).rev() {
            let rhs = a.scale(&int(-(j as i64)).recip());
            let (b, c) = solve_bezout(&uv, &v, &rhs).expect("gcd(u·v', v) = 1");
            h = &h + &RatFunc::new(b.clone(), v.pow(j));
            a = &(-&c.scale(&int(j as i64))) - &(&u * &b.derivative());
        }
        d = &u * &v;
    }
    (h, RatFunc::new(a, d))
}

/// One block of poles sharing a residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueFactor {
    /// Monic factor of the simple-part denominator; every root of it has the
    /// residue below.
    pub factor: Poly,
    /// The common residue when it is rational; `None` for the block of poles
    /// whose residues are irrational.
    pub residue: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueReport {
    /// Simple-pole part after Hermite reduction.
    pub simple_part: RatFunc,
    /// Monic Rothstein–Trager resultant; its roots are the residues.
    pub residue_poly: Poly,
    pub per_factor: Vec<ResidueFactor>,
    /// True iff every residue is an integer (vacuously true with no poles).
    pub all_integer: bool,
}

impl ResidueReport {
    /// `(factor, ℓ)` blocks when all residues are integers.
    pub fn integer_blocks(&self) -> Option<Vec<(Poly, i64)>> {
        if !self.all_integer {
            return None;
        }
        self.per_factor
            .iter()
            .map(|f| {
                let r = f.residue.as_ref()?;
                Some((f.factor.clone(), i64::try_from(r.to_integer()).ok()?))
            })
            .collect()
    }

    /// First residue that is not an integer: `Some(Some(v))` for a rational
    /// value, `Some(None)` when only irrational residues are at fault.
    pub fn first_non_integer(&self) -> Option<Option<Rat>> {
        if self.all_integer {
            return None;
        }
        for f in &self.per_factor {
            match &f.residue {
                Some(r) if !is_integer(r) => return Some(Some(r.clone())),
                None => return Some(None),
                _ => {}
            }
        }
        Some(None)
    }
}

/// Residues of `r` at its finite poles, via Hermite reduction and the
/// Rothstein–Trager resultant `res_x(D, A − t·D')` of the simple part `A/D`.
pub fn residues(r: &RatFunc) -> ResidueReport {
    let (_, g) = hermite_reduce(r);
    let (a, d) = (g.num(), g.den());
    if g.is_zero() {
        return ResidueReport {
            simple_part: g,
            residue_poly: Poly::one(),
            per_factor: Vec::new(),
            all_integer: true,
        };
    }
    let residue_poly = residue_resultant(a, d).monic();
    let roots = rational_roots(&residue_poly).expect("resultant is nonzero");
    let all_integer =
        roots.len() == residue_poly.degree().unwrap_or(0) && roots.iter().all(is_integer);

    let mut distinct = roots;
    distinct.dedup();
    let dd = d.derivative();
    let mut rest = d.clone();
    let mut per_factor = Vec::new();
    for c in distinct {
        let block = poly_gcd(d, &(a - &dd.scale(&c)));
        rest = rest.div_exact(&block).expect("blocks divide the denominator");
        per_factor.push(ResidueFactor {
            factor: block,
            residue: Some(c),
        });
    }
    if !rest.is_constant() {
        per_factor.push(ResidueFactor {
            factor: rest.monic(),
            residue: None,
        });
    }
    ResidueReport {
        simple_part: g,
        residue_poly,
        per_factor,
        all_integer,
    }
}
