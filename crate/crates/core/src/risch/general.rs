use super::{poly_lcm, verify_solution, NoSolutionReason, RischEquation, RischOutcome, RischStatus, SolverKind};
use crate::algebra::linalg::{self, LinearSolution};
use crate::algebra::{is_integer, poly_gcd, positive_integer, residues, squarefree_decompose, Poly, Rat, RatFunc};

/// A priori shape of every rational solution: `y = Y/E` with
/// `deg Y ≤ numerator_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionBounds {
    pub denominator: Poly,
    /// Upper bound for `deg y = deg Y − deg E` at infinity.
    pub degree_at_infinity: i64,
    /// `None` when the bounds exclude every nonzero solution.
    pub numerator_degree: Option<usize>,
}

/// Coprime pieces of `den(a)·den(b)` tagged with their pole orders in `a` and `b`.
fn pole_pieces(ad: &Poly, bd: &Poly) -> Vec<(Poly, u32, u32)> {
    let fa = squarefree_decompose(ad).expect("denominator is nonzero");
    let fb = squarefree_decompose(bd).expect("denominator is nonzero");
    let mut rest_b: Vec<Poly> = fb.iter().map(|(q, _)| q.clone()).collect();
    let mut pieces = Vec::new();
    for (qa, i) in &fa {
        let mut rest_a = qa.clone();
        for ((_, j), rb) in fb.iter().zip(rest_b.iter_mut()) {
            let g = poly_gcd(&rest_a, rb);
            if !g.is_constant() {
                rest_a = rest_a.div_exact(&g).expect("gcd divides");
                *rb = rb.div_exact(&g).expect("gcd divides");
                pieces.push((g, *i, *j));
            }
        }
        if !rest_a.is_constant() {
            pieces.push((rest_a.monic(), *i, 0));
        }
    }
    for ((_, j), rb) in fb.iter().zip(rest_b) {
        if !rb.is_constant() {
            pieces.push((rb.monic(), 0, *j));
        }
    }
    pieces
}

/// Pole and degree bounds for rational solutions of `y′ + a·y = b`.
pub fn solution_bounds(eq: &RischEquation) -> SolutionBounds {
    let (a, b) = (&eq.a, &eq.b);
    let (an, ad) = (a.num(), a.den());
    let bd = b.den();

    // Positive integer residues of a at its simple poles, by block.
    let positive_blocks: Vec<(Poly, i64)> = residues(a)
        .per_factor
        .iter()
        .filter_map(|f| f.residue.as_ref().and_then(positive_integer).map(|r| (f.factor.clone(), r)))
        .collect();

    let mut denominator = Poly::one();
    for (piece, i, j) in pole_pieces(ad, bd) {
        let (i, j) = (i as i64, j as i64);
        match i {
            0 => denominator = &denominator * &piece.pow((j - 1).max(0) as u32),
            1 => {
                let mut rest = piece.clone();
                for (block, r) in &positive_blocks {
                    let sub = poly_gcd(&rest, block);
                    if !sub.is_constant() {
                        rest = rest.div_exact(&sub).expect("gcd divides");
                        denominator = &denominator * &sub.pow((j - 1).max(*r).max(0) as u32);
                    }
                }
                denominator = &denominator * &rest.pow((j - 1).max(0) as u32);
            }
            _ => denominator = &denominator * &piece.pow((j - i).max(0) as u32),
        }
    }

    let db = b.degree_at_infinity().unwrap_or(i64::MIN / 4);
    let degree_at_infinity = match a.degree_at_infinity() {
        Some(da) if da >= 0 => db - da,
        Some(-1) => {
            let lambda = an.leading_coeff() / ad.leading_coeff();
            let generic = db + 1;
            if is_integer(&lambda) {
                let cancel = -i64::try_from(lambda.to_integer()).unwrap_or(i64::MAX / 4);
                generic.max(cancel)
            } else {
                generic
            }
        }
        _ => (db + 1).max(0),
    };
    let total = denominator.degree_i64() + degree_at_infinity;
    SolutionBounds {
        denominator,
        degree_at_infinity,
        numerator_degree: (total >= 0).then_some(total as usize),
    }
}

/// Coefficient matrix (rows = powers of x) of polynomial columns.
fn coefficient_system(columns: &[Poly], rhs: &Poly) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let rows = columns
        .iter()
        .chain(std::iter::once(rhs))
        .map(|p| p.degree().map_or(0, |d| d + 1))
        .max()
        .unwrap_or(0);
    let matrix = (0..rows).map(|r| columns.iter().map(|c| c.coeff(r)).collect()).collect();
    let rhs = (0..rows).map(|r| rhs.coeff(r)).collect();
    (matrix, rhs)
}

/// Undetermined coefficients for `y = Y/E`, `deg Y ≤ n`.
pub fn solve_with_bounds(eq: &RischEquation, e: &Poly, n: usize) -> Option<RatFunc> {
    let (an, ad) = (eq.a.num(), eq.a.den());
    let (bn, bd) = (eq.b.num(), eq.b.den());
    let m = poly_lcm(ad, bd);
    let m_ad = m.div_exact(ad).expect("lcm");
    let m_bd = m.div_exact(bd).expect("lcm");
    // Y′·E·M − Y·E′·M + (M/ad)·an·E·Y = (M/bd)·bn·E²
    let em = e * &m;
    let ep_m = &e.derivative() * &m;
    let a_term = &(&m_ad * an) * e;
    let columns: Vec<Poly> = (0..=n)
        .map(|i| {
            let xi = Poly::monomial(Rat::from_integer(1.into()), i);
            &(&(&xi.derivative() * &em) - &(&xi * &ep_m)) + &(&xi * &a_term)
        })
        .collect();
    let rhs = &(&m_bd * bn) * &(e * e);
    let (matrix, rhs) = coefficient_system(&columns, &rhs);
    match linalg::solve(&matrix, &rhs, n + 1) {
        LinearSolution::Inconsistent { .. } => None,
        LinearSolution::Solved { solution, .. } => Some(RatFunc::new(Poly::from_coeffs(solution), e.clone())),
    }
}

/// Decides rational solvability by pole/degree bounds and undetermined
/// coefficients; any returned solution has been substituted back.
pub fn solve_general(eq: &RischEquation) -> RischOutcome {
    let outcome = |status| RischOutcome {
        status,
        solver: SolverKind::General,
        case: None,
    };
    if eq.b.is_zero() {
        return outcome(RischStatus::RationalSolution(RatFunc::zero()));
    }
    let bounds = solution_bounds(eq);
    let Some(n) = bounds.numerator_degree else {
        return outcome(RischStatus::NoRationalSolution(NoSolutionReason::PoleBoundExclusion));
    };
    match solve_with_bounds(eq, &bounds.denominator, n) {
        Some(h) => {
            assert!(verify_solution(eq, &h), "general solver produced a non-solution for {eq}");
            outcome(RischStatus::RationalSolution(h))
        }
        None => outcome(RischStatus::NoRationalSolution(NoSolutionReason::InconsistentSystem)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d))
    }

    #[test]
    fn examples() {
        // Example 1 at (a, b, c) = (3, 1, −1), order 2.
        let alpha = rf(&[-1, 1, 1], &[0, 0, 0, 1]);
        let beta2 = (&rf(&[3], &[0, 0, 0, 1]) - &rf(&[-1, 1, 1], &[0, 0, 0, 0, 0, 0, 1])).scale(&int(-2));
        let eq = RischEquation::new(alpha, beta2);
        assert_eq!(solve_general(&eq).solution(), Some(&rf(&[2, 0, -6], &[0, 0, 0, 1])));

        let eq = RischEquation::new(rf(&[1], &[0, 1]), RatFunc::zero());
        assert_eq!(solve_general(&eq).solution(), Some(&RatFunc::zero()));

        let eq = RischEquation::new(RatFunc::one(), RatFunc::x());
        assert_eq!(solve_general(&eq).solution(), Some(&rf(&[-1, 1], &[1])));
    }

    #[test]
    fn no_solution_cases() {
        // y′ = 1/x has no rational solution.
        let eq = RischEquation::new(RatFunc::zero(), rf(&[1], &[0, 1]));
        assert!(!solve_general(&eq).has_solution());
        // y′ + y = 1/x: a regular, b with a simple pole → E = 1, deg ≤ −1.
        let eq = RischEquation::new(RatFunc::one(), rf(&[1], &[0, 1]));
        assert_eq!(solve_general(&eq).reason(), Some(NoSolutionReason::PoleBoundExclusion));
    }

    #[test]
    fn residue_cancellation_poles() {
        // y = 1/x² solves y′ + (3/x)·y = 1/x³: the pole order comes from the residue.
        let eq = RischEquation::new(rf(&[3], &[0, 1]), rf(&[1], &[0, 0, 0, 1]));
        let bounds = solution_bounds(&eq);
        assert_eq!(bounds.denominator, Poly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(solve_general(&eq).solution(), Some(&rf(&[1], &[0, 0, 1])));
        // Cancellation at infinity with a negative degree: y = x^{-3} + x^{-4}
        // for a = 3/x + 1/x², forcing deg y = −3 > deg b + 1.
        let a = rf(&[1, 3], &[0, 0, 1]);
        let y = rf(&[1, 1], &[0, 0, 0, 0, 1]);
        let b = &y.derivative() + &(&a * &y);
        let eq = RischEquation::new(a, b);
        let h = solve_general(&eq).solution().cloned().unwrap();
        assert!(verify_solution(&eq, &h));
    }
}
