//! The serializable view of a cabling sequence and its classification.

use serde::{Deserialize, Serialize};
use torus_tunnels::{BigInt, CablingSequence, TunnelClassification, TunnelKind};

/// One tunnel of one knot, as written by every non-text output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(with = "json_int")]
    pub p: BigInt,
    #[serde(with = "json_int")]
    pub q: BigInt,
    pub tunnel: Tunnel,
    pub simple_slope: Fraction,
    #[serde(with = "json_int_vec")]
    pub slopes: Vec<BigInt>,
    pub binaries: Vec<u8>,
    #[serde(with = "json_pair_vec")]
    pub intermediates: Vec<(BigInt, BigInt)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tunnel {
    Middle,
    Upper,
    Lower,
}

impl From<TunnelKind> for Tunnel {
    fn from(kind: TunnelKind) -> Self {
        match kind {
            TunnelKind::Middle => Tunnel::Middle,
            TunnelKind::Upper => Tunnel::Upper,
            TunnelKind::Lower => Tunnel::Lower,
        }
    }
}

impl Tunnel {
    pub fn name(self) -> &'static str {
        match self {
            Tunnel::Middle => "middle",
            Tunnel::Upper => "upper",
            Tunnel::Lower => "lower",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    #[serde(with = "json_int")]
    pub num: BigInt,
    #[serde(with = "json_int")]
    pub den: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub case: String,
    pub distinct_count: usize,
    pub coincidences: Vec<Vec<Tunnel>>,
}

impl From<&TunnelClassification> for Classification {
    fn from(c: &TunnelClassification) -> Self {
        Classification {
            case: c.case_label.to_string(),
            distinct_count: c.distinct_count,
            coincidences: c
                .coincidences
                .iter()
                .map(|class| class.iter().map(|&k| k.into()).collect())
                .collect(),
        }
    }
}

impl OutputRecord {
    pub fn new(
        p: BigInt,
        q: BigInt,
        seq: CablingSequence,
        classification: Option<&TunnelClassification>,
    ) -> Self {
        OutputRecord {
            p,
            q,
            tunnel: seq.tunnel_kind.into(),
            simple_slope: Fraction {
                num: seq.simple_slope.numer().clone(),
                den: seq.simple_slope.denom().clone(),
            },
            binaries: seq.binaries.iter().map(|&b| u8::from(b)).collect(),
            slopes: seq.slopes,
            intermediates: seq.intermediates,
            classification: classification.map(Into::into),
        }
    }
}

// Integers go through serde_json's arbitrary-precision numbers so values
// of any size stay JSON numbers.

fn to_number(v: &BigInt) -> serde_json::Number {
    v.to_string()
        .parse()
        .expect("integer literal is a JSON number")
}

fn from_number<E: serde::de::Error>(n: serde_json::Number) -> Result<BigInt, E> {
    n.to_string()
        .parse()
        .map_err(|_| E::custom(format!("expected an integer, found {n}")))
}

mod json_int {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_number(serde_json::Number::deserialize(d)?)
    }
}

mod json_int_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_number))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<serde_json::Number>::deserialize(d)?
            .into_iter()
            .map(from_number)
            .collect()
    }
}

mod json_pair_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[(BigInt, BigInt)], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|(a, b)| [to_number(a), to_number(b)]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(BigInt, BigInt)>, D::Error> {
        Vec::<[serde_json::Number; 2]>::deserialize(d)?
            .into_iter()
            .map(|[a, b]| Ok((from_number(a)?, from_number(b)?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_tunnels::{classify, middle_sequence};

    #[test]
    fn json_shape() {
        let seq = middle_sequence(5, 3).unwrap();
        let rec = OutputRecord::new(5.into(), 3.into(), seq, None);
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"p":5,"q":3,"tunnel":"middle","simple_slope":{"num":1,"den":3},"slopes":[7],"binaries":[],"intermediates":[[3,2],[5,3]]}"#
        );
    }

    #[test]
    fn huge_integers_stay_numbers() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let seq = middle_sequence(41, 29).unwrap();
        let mut rec =
            OutputRecord::new(41.into(), 29.into(), seq, Some(&classify(41, 29).unwrap()));
        rec.slopes.push(-big.clone());
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("-123456789012345678901234567890]"));
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn non_integer_rejected() {
        let json = r#"{"p":5.5,"q":3,"tunnel":"middle","simple_slope":{"num":1,"den":3},"slopes":[],"binaries":[],"intermediates":[]}"#;
        assert!(serde_json::from_str::<OutputRecord>(json).is_err());
    }
}
