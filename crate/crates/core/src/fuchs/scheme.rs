//! Riemann schemes.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::local::{apparent_test, indicial_exponents, Verdict};
use super::{singular_points, LinearODE2, Point};
use crate::algebra::rational::int;
use crate::algebra::Rational;
use crate::error::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct SchemeEntry {
    pub point: Point,
    /// Ascending.
    pub exponents: (Rational, Rational),
    /// `Some` when the exponents are integers with positive difference, so
    /// the apparent test applies.
    pub apparent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RiemannScheme {
    pub entries: Vec<SchemeEntry>,
}

impl RiemannScheme {
    pub fn fuchs_sum(&self) -> Rational {
        self.entries
            .iter()
            .map(|e| &e.exponents.0 + &e.exponents.1)
            .sum()
    }

    /// For order two the exponents add up to (number of points) − 2.
    pub fn fuchs_relation_holds(&self) -> bool {
        self.fuchs_sum() == int(self.entries.len() as i64 - 2)
    }

    pub fn entry(&self, point: &Point) -> Option<&SchemeEntry> {
        self.entries.iter().find(|e| &e.point == point)
    }

    pub fn apparent_points(&self) -> Vec<&Point> {
        self.entries
            .iter()
            .filter(|e| e.apparent == Some(true))
            .map(|e| &e.point)
            .collect()
    }
}

pub fn riemann_scheme(ode: &LinearODE2) -> Result<RiemannScheme, Error> {
    let mut entries = Vec::new();
    for point in singular_points(ode)? {
        let exponents = indicial_exponents(ode, &point)?;
        let apparent = match apparent_test(ode, &point) {
            Ok(cert) => Some(cert.verdict == Verdict::Apparent),
            Err(Error::NotApplicable(_)) => None,
            Err(e) => return Err(e),
        };
        entries.push(SchemeEntry {
            point,
            exponents,
            apparent,
        });
    }
    Ok(RiemannScheme { entries })
}

/// Three-row table: points, then the two exponent rows, columns padded to a
/// common width. Apparent points are marked with `*`.
impl fmt::Display for RiemannScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<[String; 3]> = self
            .entries
            .iter()
            .map(|e| {
                let mark = if e.apparent == Some(true) { "*" } else { "" };
                [
                    format!("{}{mark}", e.point),
                    e.exponents.0.to_string(),
                    e.exponents.1.to_string(),
                ]
            })
            .collect();
        for row in 0..3 {
            let cells: Vec<String> = cols
                .iter()
                .map(|c| {
                    let w = c.iter().map(|x| x.chars().count()).max().unwrap_or(0);
                    let pad = w - c[row].chars().count();
                    format!("{}{}", c[row], " ".repeat(pad))
                })
                .collect();
            writeln!(f, "{}", cells.join(" | ").trim_end())?;
        }
        Ok(())
    }
}
