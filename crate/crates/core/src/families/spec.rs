use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use super::{truncation_family, GradedFamily, GrowthExpr, Member, Preset};
use crate::algebra::{Ring, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum FamilyJson {
    Powers {
        ring: Option<Value>,
        ideal: String,
    },
    ClosurePowers {
        ring: Option<Value>,
        ideal: String,
    },
    SymbolicMin {
        ring: Option<Value>,
        ideal: String,
    },
    Mixed {
        ring: Option<Value>,
        #[serde(rename = "J")]
        j: String,
        #[serde(rename = "I")]
        i: String,
        a: String,
    },
    Truncation {
        base: Box<FamilyJson>,
        a: usize,
    },
    Closure {
        base: Box<FamilyJson>,
    },
    Explicit {
        ring: Option<Value>,
        members: Vec<String>,
    },
    Preset {
        name: String,
        f: Option<String>,
        #[serde(rename = "char")]
        characteristic: Option<u64>,
    },
}

fn ring_of(v: &Option<Value>) -> Result<Ring> {
    match v {
        Some(v) => RingSpec::from_value(v),
        None => RingSpec::degrevlex(2, &["x", "y", "a", "b"]),
    }
}

fn member(ring: &Ring, text: &str) -> Result<Member> {
    Member::from_presentation(IdealPresentation::parse(ring, text)?)
}

fn monomial(ring: &Ring, text: &str) -> Result<crate::monomial::MonomialIdeal> {
    match member(ring, text)? {
        Member::Monomial(m) => Ok((*m).clone()),
        Member::General(_) => Err(Error::InvalidArgument("this family kind needs a monomial ideal".into())),
    }
}

fn build(spec: FamilyJson) -> Result<Arc<GradedFamily>> {
    Ok(match spec {
        FamilyJson::Powers { ring, ideal } => GradedFamily::powers(member(&ring_of(&ring)?, &ideal)?),
        FamilyJson::ClosurePowers { ring, ideal } => GradedFamily::closure_powers(monomial(&ring_of(&ring)?, &ideal)?),
        FamilyJson::SymbolicMin { ring, ideal } => GradedFamily::symbolic_min(monomial(&ring_of(&ring)?, &ideal)?),
        FamilyJson::Mixed { ring, j, i, a } => {
            let r = ring_of(&ring)?;
            GradedFamily::mixed(member(&r, &j)?, member(&r, &i)?, GrowthExpr::parse(&a)?)?
        }
        FamilyJson::Truncation { base, a } => truncation_family(build(*base)?, a)?,
        FamilyJson::Closure { base } => GradedFamily::closure(build(*base)?),
        FamilyJson::Explicit { ring, members } => {
            let r = ring_of(&ring)?;
            let ms = members.iter().map(|m| member(&r, m)).collect::<Result<Vec<_>>>()?;
            GradedFamily::listed("explicit", &r, ms)
        }
        FamilyJson::Preset { name, f, characteristic } => {
            GradedFamily::preset(Preset::by_name(&name, f.as_deref())?, characteristic.unwrap_or(2))?
        }
    })
}

/// Builds a family from its JSON description, e.g.
/// `{"kind": "preset", "name": "ex-diverge", "f": "n^2"}` or
/// `{"kind": "truncation", "base": {"kind": "powers", "ideal": "x^3, y^3"}, "a": 3}`.
/// Rings default to `F_2[x,y,a,b]`.
pub fn family_from_json(text: &str) -> Result<Arc<GradedFamily>> {
    let spec: FamilyJson = serde_json::from_str(text)?;
    build(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds() {
        let f = family_from_json(r#"{"kind": "powers", "ideal": "x^3, y^3"}"#).unwrap();
        assert_eq!(f.member(2).unwrap().render(), "(x^6, x^3*y^3, y^6)");
        let t = family_from_json(
            r#"{"kind": "truncation", "base": {"kind": "preset", "name": "mprimary-counter"}, "a": 1}"#,
        )
        .unwrap();
        assert!(t.member(2).is_ok());
        let m = family_from_json(
            r#"{"kind": "mixed", "ring": {"char": 0, "vars": ["x", "y"]}, "J": "x", "I": "x, y", "a": "isqrt(n)"}"#,
        )
        .unwrap();
        assert_eq!(m.member(4).unwrap().as_monomial().unwrap().max_gen_degree().unwrap(), 6);
        let e = family_from_json(r#"{"kind": "explicit", "ring": {"char": 2, "vars": ["x", "y"]}, "members": ["x", "y"]}"#)
            .unwrap();
        assert!(e.member(3).is_err());
        assert!(family_from_json(r#"{"kind": "closure_powers", "ideal": "x + y"}"#).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(family_from_json(r#"{"kind": "nope"}"#).is_err());
        assert!(family_from_json(r#"{"kind": "powers", "ideal": "x", "extra": 1}"#).is_err());
        assert!(family_from_json(r#"{"kind": "preset", "name": "ex-diverge", "f": "n +"}"#).is_err());
        assert!(family_from_json(r#"{"kind": "truncation", "base": {"kind": "powers", "ideal": "x"}, "a": 0}"#).is_err());
        assert!(family_from_json("[").is_err());
    }
}
