//! Textual algebra specifications accepted by the command line.

use std::fmt;
use std::str::FromStr;

use crate::canonical::{build_biquaternion, build_table, AlgebraTable, HurwitzClass};
use crate::error::{Error, Result};
use crate::ga::Signature;
use crate::isomorphism::geometric_cayley_table;
use crate::octonify::{cayley_table_bullet, BulletVariant};

/// One of `O` (any Hurwitz class name), `ga:p,q`, `bullet:p,q:+|-`,
/// `biq:C|Cs,H|Hs`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraSpec {
    Hurwitz(HurwitzClass),
    Geometric(Signature),
    Bullet(Signature, BulletVariant),
    Biquaternion(HurwitzClass, HurwitzClass),
}

fn parse_pq(s: &str) -> Result<Signature> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected `p,q`, got `{s}`")))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad integer `{t}`")));
    Signature::from_pq(num(p)?, num(q)?)
}

impl FromStr for AlgebraSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("ga:") {
            return Ok(AlgebraSpec::Geometric(parse_pq(rest)?));
        }
        if let Some(rest) = s.strip_prefix("bullet:") {
            let (pq, v) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `bullet:p,q:+|-`, got `{s}`")))?;
            return Ok(AlgebraSpec::Bullet(parse_pq(pq)?, v.parse()?));
        }
        if let Some(rest) = s.strip_prefix("biq:") {
            let (c, h) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `biq:C|Cs,H|Hs`, got `{s}`")))?;
            let (c, h) = (c.parse()?, h.parse()?);
            build_biquaternion(c, h)?;
            return Ok(AlgebraSpec::Biquaternion(c, h));
        }
        Ok(AlgebraSpec::Hurwitz(s.parse()?))
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Hurwitz(c) => write!(f, "{c}"),
            AlgebraSpec::Geometric(s) => write!(f, "ga:{},{}", s.p(), s.q()),
            AlgebraSpec::Bullet(s, v) => write!(f, "bullet:{},{}:{}", s.p(), s.q(), v.sign_char()),
            AlgebraSpec::Biquaternion(c, h) => write!(f, "biq:{c},{h}"),
        }
    }
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<AlgebraTable> {
        match *self {
            AlgebraSpec::Hurwitz(c) => Ok(build_table(c)),
            AlgebraSpec::Geometric(s) => Ok(geometric_cayley_table(s)),
            AlgebraSpec::Bullet(s, v) => cayley_table_bullet(s, v),
            AlgebraSpec::Biquaternion(c, h) => build_biquaternion(c, h),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::Entry;

    #[test]
    fn parses_and_round_trips() {
        for text in ["O", "Hs", "ga:0,3", "bullet:3,0:+", "bullet:1,2:-", "biq:Cs,H"] {
            let spec: AlgebraSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
    }

    #[test]
    fn rejects_bad_specs() {
        for text in ["Q", "ga:2,2", "ga:3", "bullet:3,0", "bullet:3,0:*", "biq:H,C", "biq:C", ""] {
            assert!(text.parse::<AlgebraSpec>().is_err(), "{text}");
        }
    }

    #[test]
    fn table_entries() {
        let t = "ga:0,3".parse::<AlgebraSpec>().unwrap().build().unwrap();
        assert_eq!(t.entry(1, 1), Entry::new(0, -1));
        let t = "bullet:3,0:+".parse::<AlgebraSpec>().unwrap().build().unwrap();
        assert_eq!(t.entry(1, 1), Entry::new(0, -1));
    }
}
