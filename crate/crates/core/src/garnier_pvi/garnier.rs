//! The Garnier Hamiltonian and its reduction to `P_VI`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::params::{alpha_from_theta, PVIVariant};
use super::residual::pvi_rhs;
use super::solution::AlgebraicSolution;
use crate::algebra::{RatExpr, Rational, Var};
use crate::error::Error;
use crate::fuchs::{okamoto_hamiltonian, Theta};

const LAMBDA: Var = Var::Lambda;
const MU: Var = Var::Mu;
const T: Var = Var::T;
/// `dλ/dt` as an independent variable.
const DLAMBDA: Var = Var::V;

/// `K(λ, μ, t)` for `θ`, with `k` substituted.
pub fn hamiltonian_k(theta: &Theta) -> RatExpr {
    okamoto_hamiltonian(theta, &RatExpr::var(LAMBDA), &RatExpr::var(MU), &RatExpr::var(T))
}

/// Both sides of `λ'' = RHS(λ, λ', t)` after eliminating `μ`, as functions
/// of `(λ, λ', t)`.
pub fn eliminate_mu(theta: &Theta) -> Result<(RatExpr, RatExpr), Error> {
    let k = hamiltonian_k(theta);
    let km = k.differentiate(MU);
    let kl = k.differentiate(LAMBDA);
    // λ'' = K_μt + K_μλ λ' + K_μμ μ', with λ' = K_μ and μ' = −K_λ
    let lpp = &(&km.differentiate(T) + &(&km.differentiate(LAMBDA) * &km))
        - &(&km.differentiate(MU) * &kl);
    let (c0, c1) = km.split_affine(MU)?;
    let mu = (&RatExpr::var(DLAMBDA) - &c0).checked_div(&c1)?;
    let lhs = lpp.substitute_one(MU, &mu)?;
    let classical = alpha_from_theta(theta).classical().map(|x| x.to_ratexpr());
    let rhs = pvi_rhs(
        &RatExpr::var(LAMBDA),
        &RatExpr::var(DLAMBDA),
        &RatExpr::var(T),
        &classical,
        PVIVariant::Standard,
    )?;
    Ok((lhs, rhs))
}

/// A sample where the two sides differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// `(λ, λ', t)`
    pub point: [Rational; 3],
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaOutcome {
    pub theta: Theta,
    pub samples: usize,
    /// Total degree bound of the cleared difference of both sides.
    pub degree_bound: usize,
    pub mismatch: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GarnierPviReport {
    pub seed: u64,
    /// Number of distinct values each coordinate is drawn from.
    pub grid_size: u64,
    pub outcomes: Vec<ThetaOutcome>,
    pub pass: bool,
}

impl GarnierPviReport {
    /// Upper bound on the probability that a nonzero difference vanishes
    /// at every sample of the weakest outcome, as `log10`.
    pub fn miss_log10(&self) -> f64 {
        self.outcomes
            .iter()
            .map(|o| {
                let p = o.degree_bound as f64 / self.grid_size as f64;
                o.samples as f64 * num_traits::Float::log10(p)
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Coordinates are `k/7` with `|k| ≤ GRID_HALF`.
const GRID_HALF: i64 = 1_000_000;

fn draw(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-GRID_HALF..=GRID_HALF)), BigInt::from(7))
}

fn degree_bound(lhs: &RatExpr, rhs: &RatExpr) -> usize {
    let d = |x: &RatExpr| (x.num().total_degree(), x.den().total_degree());
    let (nl, dl) = d(lhs);
    let (nr, dr) = d(rhs);
    (nl + dr).max(nr + dl)
}

/// `count` parameter vectors with entries `n/d`, `|n| ≤ 40`, `1 ≤ d ≤ 9`.
pub fn sample_thetas(count: usize, seed: u64) -> Vec<Theta> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || Rational::new(BigInt::from(rng.gen_range(-40..=40)), BigInt::from(rng.gen_range(1..=9)));
    (0..count)
        .map(|_| {
            let (a, b, c, d) = (draw(), draw(), draw(), draw());
            Theta::new(a, b, c, d)
        })
        .collect()
}

/// Compares both sides of the elimination at `samples` random points for
/// every `θ`. At least `degree_bound + 1` samples are taken per `θ`.
pub fn garnier_to_pvi_check(thetas: &[Theta], samples: usize, seed: u64) -> Result<GarnierPviReport, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcomes = Vec::with_capacity(thetas.len());
    for theta in thetas {
        let (lhs, rhs) = eliminate_mu(theta)?;
        let bound = degree_bound(&lhs, &rhs);
        let target = samples.max(bound + 1);
        let mut taken = 0;
        let mut mismatch = None;
        while taken < target {
            let point = [draw(&mut rng), draw(&mut rng), draw(&mut rng)];
            let env: BTreeMap<Var, Rational> =
                [(LAMBDA, point[0].clone()), (DLAMBDA, point[1].clone()), (T, point[2].clone())]
                    .into_iter()
                    .collect();
            let (Ok(l), Ok(r)) = (lhs.eval_all(&env), rhs.eval_all(&env)) else {
                continue;
            };
            taken += 1;
            if l != r {
                mismatch = Some(Witness { point, lhs: l, rhs: r });
                break;
            }
        }
        outcomes.push(ThetaOutcome {
            theta: theta.clone(),
            samples: taken,
            degree_bound: bound,
            mismatch,
        });
    }
    let pass = outcomes.iter().all(|o| o.mismatch.is_none());
    Ok(GarnierPviReport {
        seed,
        grid_size: 2 * GRID_HALF as u64 + 1,
        outcomes,
        pass,
    })
}

/// `(dλ/dt − ∂K/∂μ, dμ/dt + ∂K/∂λ)` along `(λ(a), μ(a), t(a))`.
pub fn verify_garnier_on_curve(sol: &AlgebraicSolution, theta: &Theta) -> Result<(RatExpr, RatExpr), Error> {
    let mu = sol
        .mu
        .as_ref()
        .ok_or_else(|| Error::Structure(String::from("curve carries no μ(a)")))?;
    let k = hamiltonian_k(theta);
    let bind: BTreeMap<Var, RatExpr> = [
        (LAMBDA, sol.lambda.clone()),
        (MU, mu.clone()),
        (T, sol.t.clone()),
    ]
    .into_iter()
    .collect();
    let on = |x: RatExpr| x.substitute(&bind);
    let km = on(k.differentiate(MU))?;
    let kl = on(k.differentiate(LAMBDA))?;
    let r1 = &sol.d_dt(&sol.lambda)? - &km;
    let r2 = &sol.d_dt(mu)? + &kl;
    Ok((r1, r2))
}

pub fn describe_theta(theta: &Theta) -> String {
    format!(
        "(θ0, θ1, θt, θ∞) = ({}, {}, {}, {})",
        theta.theta0, theta.theta1, theta.thetat, theta.thetainf
    )
}
