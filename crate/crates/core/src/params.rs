//! Deformation parameters `(a, b, c, d, w, z)` and their hypotheses.
//!
//! The construction needs `a` a nonzero non-unit of GF(2)[[t]], `b, c, d`
//! congruent to 1 mod t with `c != d`, `pi(x) = x^2 + a x + b` irreducible,
//! some `w` with `(x+w)(x+c)(x+d) = x pi(x) + a`, and `z` a nonzero
//! non-unit. Comparing coefficients in that cubic identity gives
//! `a = w+c+d`, `b = wc+wd+cd` and `a = wcd`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quotient::{irreducibility_check, RootSearch, XPoly};
use crate::scalar::{Gf2Poly, RationalFunction, ScalarError, Valuation, DEFAULT_SERIES_PRECISION};

/// Root-search precision tried first when certifying irreducibility of pi.
pub const IRREDUCIBILITY_PRECISION: usize = 2;
/// Fallback precision when the first search is inconclusive.
pub const IRREDUCIBILITY_ESCALATION: usize = 8;
/// Largest degree bound accepted by [`search`].
pub const MAX_SEARCH_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: invalid value for `{key}`: {source}")]
    Value {
        line: usize,
        key: String,
        source: ScalarError,
    },
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error("degree bound {0} exceeds the supported maximum {MAX_SEARCH_DEGREE}")]
    DegreeBoundTooLarge(u32),
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationParams {
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub c: RationalFunction,
    pub d: RationalFunction,
    pub w: RationalFunction,
    pub z: RationalFunction,
    #[serde(rename = "precision")]
    pub series_precision: usize,
}

impl DeformationParams {
    /// The worked example: `a = (t+t^2+t^3)/(1+t)`, `b = 1+t^2+t^3`,
    /// `c = 1/(1+t)`, `d = 1+t+t^2`, `w = t`, with `z = t`.
    pub fn example() -> Self {
        let rf = |num: &[usize], den: &[usize]| {
            RationalFunction::new(Gf2Poly::from_exponents(num), Gf2Poly::from_exponents(den))
                .expect("nonzero denominator")
        };
        Self {
            a: rf(&[1, 2, 3], &[0, 1]),
            b: rf(&[0, 2, 3], &[0]),
            c: rf(&[0], &[0, 1]),
            d: rf(&[0, 1, 2], &[0]),
            w: rf(&[1], &[0]),
            z: RationalFunction::t(),
            series_precision: DEFAULT_SERIES_PRECISION,
        }
    }

    /// Derives `a = w+c+d` and `b = wc+wd+cd` from the roots of the cubic.
    pub fn from_wcd(
        w: RationalFunction,
        c: RationalFunction,
        d: RationalFunction,
        z: RationalFunction,
        series_precision: usize,
    ) -> Self {
        let a = &(&w + &c) + &d;
        let b = &(&(&w * &c) + &(&w * &d)) + &(&c * &d);
        Self {
            a,
            b,
            c,
            d,
            w,
            z,
            series_precision,
        }
    }

    /// `pi(x) = x^2 + a x + b`.
    pub fn pi(&self) -> XPoly {
        XPoly::new(vec![self.b.clone(), self.a.clone(), RationalFunction::one()])
    }

    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let mut push = |name: &'static str, passed: bool, detail: String| {
            checks.push(ValidationCheck {
                name,
                passed,
                detail,
            });
        };
        let positive = |r: &RationalFunction| !r.is_zero() && r.valuation() >= Valuation::Finite(1);

        push(
            "a-nonunit",
            positive(&self.a),
            format!("a = {}, valuation {}", self.a, self.a.valuation()),
        );
        for (name, v) in [("b-one-unit", &self.b), ("c-one-unit", &self.c), ("d-one-unit", &self.d)] {
            push(name, v.is_deformation_unit(), format!("{v} = 1 mod t: {}", v.is_deformation_unit()));
        }
        push("c-ne-d", self.c != self.d, format!("c = {}, d = {}", self.c, self.d));
        push(
            "w-integral",
            self.w.is_integral(),
            format!("w = {}, valuation {}", self.w, self.w.valuation()),
        );
        push(
            "z-nonunit",
            positive(&self.z),
            format!("z = {}, valuation {}", self.z, self.z.valuation()),
        );
        push(
            "precision-positive",
            self.series_precision > 0,
            format!("precision = {}", self.series_precision),
        );

        let lhs = &(&XPoly::linear(&self.w) * &XPoly::linear(&self.c)) * &XPoly::linear(&self.d);
        let rhs = &(&XPoly::x() * &self.pi()) + &XPoly::constant(self.a.clone());
        push("cubic-identity", lhs == rhs, format!("(x+w)(x+c)(x+d) = {lhs}; x*pi(x)+a = {rhs}"));

        let sum = &(&self.w + &self.c) + &self.d;
        let pairs = &(&(&self.w * &self.c) + &(&self.w * &self.d)) + &(&self.c * &self.d);
        let prod = &(&self.w * &self.c) * &self.d;
        push("coefficient-a", sum == self.a, format!("w+c+d = {sum}"));
        push("coefficient-b", pairs == self.b, format!("wc+wd+cd = {pairs}"));
        push("coefficient-constant", sum == prod, format!("w+c+d = {sum}; wcd = {prod}"));

        let (irreducible, detail) = certify_irreducible(&self.pi());
        push("pi-irreducible", irreducible, detail);

        ValidationReport { checks }
    }

    /// Parses the flat `key = value` format. `a` and `b` default to the
    /// values derived from `w, c, d`; `z` defaults to `t` and `precision`
    /// to 16.
    pub fn parse_file(text: &str) -> Result<Self, ParamsError> {
        let mut values: BTreeMap<&'static str, RationalFunction> = BTreeMap::new();
        let mut precision = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once(['=', ':']) else {
                return Err(ParamsError::Syntax {
                    line: line_no,
                    message: format!("expected `key = value`, got `{line}`"),
                });
            };
            let (key, value) = (key.trim(), value.trim());
            let slot = match key {
                "a" => "a",
                "b" => "b",
                "c" => "c",
                "d" => "d",
                "w" => "w",
                "z" => "z",
                "precision" => {
                    if precision.is_some() {
                        return Err(duplicate(line_no, key));
                    }
                    let n = value.parse::<usize>().map_err(|_| ParamsError::Syntax {
                        line: line_no,
                        message: format!("precision must be a non-negative integer, got `{value}`"),
                    })?;
                    precision = Some(n);
                    continue;
                }
                other => {
                    return Err(ParamsError::Syntax {
                        line: line_no,
                        message: format!("unknown key `{other}`"),
                    })
                }
            };
            let parsed = value.parse::<RationalFunction>().map_err(|source| ParamsError::Value {
                line: line_no,
                key: key.to_string(),
                source,
            })?;
            if values.insert(slot, parsed).is_some() {
                return Err(duplicate(line_no, key));
            }
        }
        let mut take = |k: &'static str| values.remove(k);
        let w = take("w").ok_or(ParamsError::MissingKey("w"))?;
        let c = take("c").ok_or(ParamsError::MissingKey("c"))?;
        let d = take("d").ok_or(ParamsError::MissingKey("d"))?;
        let z = take("z").unwrap_or_else(RationalFunction::t);
        let precision = precision.unwrap_or(DEFAULT_SERIES_PRECISION);
        let derived = Self::from_wcd(w, c, d, z, precision);
        Ok(Self {
            a: take("a").unwrap_or(derived.a.clone()),
            b: take("b").unwrap_or(derived.b.clone()),
            ..derived
        })
    }

    /// Serializes in the format read by [`DeformationParams::parse_file`].
    pub fn to_file_string(&self) -> String {
        format!(
            "a = {}\nb = {}\nc = {}\nd = {}\nw = {}\nz = {}\nprecision = {}\n",
            self.a, self.b, self.c, self.d, self.w, self.z, self.series_precision
        )
    }
}

fn duplicate(line: usize, key: &str) -> ParamsError {
    ParamsError::Syntax {
        line,
        message: format!("duplicate key `{key}`"),
    }
}

impl fmt::Debug for DeformationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DeformationParams {{ a: {}, b: {}, c: {}, d: {}, w: {}, z: {}, precision: {} }}",
            self.a, self.b, self.c, self.d, self.w, self.z, self.series_precision
        )
    }
}

/// Root search at the base precision, escalating once when inconclusive.
fn certify_irreducible(pi: &XPoly) -> (bool, String) {
    let mut last = String::new();
    for n in [IRREDUCIBILITY_PRECISION, IRREDUCIBILITY_ESCALATION] {
        match irreducibility_check(pi, n) {
            Ok(RootSearch::Irreducible) => return (true, format!("no root modulo t^{n}")),
            Ok(RootSearch::ReducibleWithRoot(r)) => return (false, format!("exact root {r}")),
            Ok(RootSearch::Unknown) => last = format!("roots modulo t^{n} but no exact root found"),
            Err(e) => return (false, e.to_string()),
        }
    }
    (false, last)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// All polynomials of degree at most `bound`, in increasing bit order.
fn polys_up_to(bound: u32) -> impl Iterator<Item = Gf2Poly> {
    (0u64..(1u64 << (bound + 1))).map(Gf2Poly::from_word)
}

/// Enumerates parameter tuples from polynomial `w` and `d` of degree at most
/// `degree_bound`, solving the constant-term relation `w+c+d = wcd` for
/// `c = (w+d)/(1+wd)`, and keeps those that pass [`DeformationParams::validate`].
pub fn search(degree_bound: u32, limit: usize) -> Result<Vec<DeformationParams>, ParamsError> {
    if degree_bound > MAX_SEARCH_DEGREE {
        return Err(ParamsError::DegreeBoundTooLarge(degree_bound));
    }
    let mut found = Vec::new();
    'outer: for w in polys_up_to(degree_bound) {
        for d in polys_up_to(degree_bound).filter(Gf2Poly::constant_term) {
            if found.len() >= limit {
                break 'outer;
            }
            let w = RationalFunction::from_poly(w.clone());
            let d = RationalFunction::from_poly(d);
            let den = &RationalFunction::one() + &(&w * &d);
            let Ok(c) = (&w + &d).div(&den) else { continue };
            let candidate =
                DeformationParams::from_wcd(w, c, d, RationalFunction::t(), DEFAULT_SERIES_PRECISION);
            if candidate.validate().passed() {
                found.push(candidate);
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn example_values() {
        let p = DeformationParams::example();
        assert_eq!(p.a, rf("(t+t^2+t^3)/(1+t)"));
        assert_eq!(p.b, rf("1+t^2+t^3"));
        assert_eq!(p.c, rf("1/(1+t)"));
        assert_eq!(p.d, rf("1+t+t^2"));
        assert_eq!(p.w, rf("t"));
        assert_eq!(p.z, rf("t"));
    }

    #[test]
    fn example_validates() {
        let report = DeformationParams::example().validate();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.get("pi-irreducible").unwrap().detail, "no root modulo t^2");
    }

    #[test]
    fn example_cubic_both_sides() {
        // both sides of the cubic identity are x^3 + a x^2 + b x + a
        let p = DeformationParams::example();
        let expected = XPoly::new(vec![p.a.clone(), p.b.clone(), p.a.clone(), RationalFunction::one()]);
        let lhs = &(&XPoly::linear(&p.w) * &XPoly::linear(&p.c)) * &XPoly::linear(&p.d);
        assert_eq!(lhs, expected);
        assert_eq!(&(&p.w * &p.c) * &p.d, p.a);
    }

    #[test]
    fn equal_c_and_d_fail() {
        let mut p = DeformationParams::example();
        p.d = p.c.clone();
        let report = p.validate();
        assert!(!report.get("c-ne-d").unwrap().passed);
    }

    #[test]
    fn zero_w_fails_the_constant_relation() {
        let p = DeformationParams::from_wcd(rf("0"), rf("1/(1+t)"), rf("1+t+t^2"), rf("t"), 16);
        let report = p.validate();
        assert!(!report.get("coefficient-constant").unwrap().passed);
        assert!(!report.get("cubic-identity").unwrap().passed);
        assert!(!report.passed());
    }

    #[test]
    fn invalid_z_fails() {
        for z in ["0", "1", "1+t", "1/t"] {
            let mut p = DeformationParams::example();
            p.z = rf(z);
            assert!(!p.validate().get("z-nonunit").unwrap().passed, "z = {z}");
        }
    }

    #[test]
    fn search_degree_zero_is_empty() {
        assert!(search(0, 100).unwrap().is_empty());
    }

    #[test]
    fn search_recovers_the_example() {
        let found = search(2, usize::MAX).unwrap();
        assert!(found.contains(&DeformationParams::example()), "{found:?}");
        assert!(found.iter().all(|p| p.validate().passed()));
    }

    #[test]
    fn search_respects_limit_and_bound() {
        assert!(search(3, 5).unwrap().len() <= 5);
        assert_eq!(search(9, 1), Err(ParamsError::DegreeBoundTooLarge(9)));
    }

    #[test]
    fn params_file_round_trip() {
        let p = DeformationParams::example();
        assert_eq!(DeformationParams::parse_file(&p.to_file_string()).unwrap(), p);
    }

    #[test]
    fn params_file_derives_a_and_b() {
        let text = "# worked example\nw = t\nc = 1/(1+t)\nd = 1 + t + t^2\n";
        assert_eq!(DeformationParams::parse_file(text).unwrap(), DeformationParams::example());
    }

    #[test]
    fn params_file_errors() {
        assert_eq!(
            DeformationParams::parse_file("c = 1\nd = 1+t"),
            Err(ParamsError::MissingKey("w"))
        );
        assert!(matches!(
            DeformationParams::parse_file("w = t\nw = t"),
            Err(ParamsError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            DeformationParams::parse_file("q = t"),
            Err(ParamsError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            DeformationParams::parse_file("w = t\nc = 1/0\nd = 1"),
            Err(ParamsError::Value { line: 2, .. })
        ));
        assert!(matches!(
            DeformationParams::parse_file("w t"),
            Err(ParamsError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            DeformationParams::parse_file("precision = -3\nw=t\nc=1\nd=1"),
            Err(ParamsError::Syntax { line: 1, .. })
        ));
    }
}
