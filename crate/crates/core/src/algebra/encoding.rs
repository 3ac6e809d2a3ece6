//! JSON term lists for `ExactPoly`.
//!
//! A polynomial is an array of `{"t", "q", "alpha", "num", "den"}` objects in
//! descending graded-lex order. Numerators and denominators are decimal
//! strings so that consumers never truncate big integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactPoly, Monomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub t: u32,
    pub q: u32,
    pub alpha: u32,
    pub num: String,
    pub den: String,
}

impl ExactPoly {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms()
            .rev()
            .map(|(m, c)| TermRecord {
                t: m.t,
                q: m.q,
                alpha: m.alpha,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<ExactPoly> {
        let mut p = ExactPoly::zero();
        for r in records {
            let num: BigInt = r
                .num
                .parse()
                .map_err(|_| Error::Parse(format!("numerator {:?}", r.num)))?;
            let den: BigInt = r
                .den
                .parse()
                .map_err(|_| Error::Parse(format!("denominator {:?}", r.den)))?;
            if den.is_zero() || den.is_negative() {
                return Err(Error::Parse(format!("denominator {:?}", r.den)));
            }
            p.add_term(Rational::new(num, den), Monomial::new(r.t, r.q, r.alpha));
        }
        Ok(p)
    }
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        ExactPoly::from_records(&records).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    #[test]
    fn round_trip() {
        let huge: BigInt = "123456789012345678901234567891".parse().unwrap();
        let p = ExactPoly::term(Rational::new(huge, BigInt::from(2)), Monomial::new(3, 1, 0))
            - ExactPoly::var(Var::Alpha).scale(&Rational::new(1.into(), 2.into()))
            + ExactPoly::from_int(5);
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with(
            r#"[{"t":3,"q":1,"alpha":0,"num":"123456789012345678901234567891","den":"2"}"#
        ));
        let back: ExactPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&ExactPoly::zero()).unwrap(), "[]");
    }

    #[test]
    fn rejects_bad_denominator() {
        let bad = r#"[{"t":0,"q":0,"alpha":0,"num":"1","den":"0"}]"#;
        assert!(serde_json::from_str::<ExactPoly>(bad).is_err());
    }
}
