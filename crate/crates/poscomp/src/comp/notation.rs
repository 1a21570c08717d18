//! Text and JSON forms of compositions.
//!
//! Text grammar (no interior whitespace in canonical output):
//!
//! ```text
//! composition := part ("+" part)*
//! part        := INT | INT "_" INT | INT "_{" INT "," INT "}"
//! ```
//!
//! JSON shape: `{"total": int, "parts": [{"size": int, "color": int|null}
//! | {"size": int, "spots": [int, int]}]}`.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ChooseTwoComposition, ColoredComposition, CompError, Part, SpottedPart};

#[derive(Debug, Clone, Copy)]
enum RawPart {
    Plain(u64),
    Colored(u64, u64),
    Spotted(u64, u64, u64),
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, what: &str) -> CompError {
        CompError::Parse {
            at: self.pos,
            what: what.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64, CompError> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| CompError::Parse {
                at: start,
                what: "integer out of range".to_string(),
            })
    }

    fn part(&mut self) -> Result<RawPart, CompError> {
        let size = self.int()?;
        if !self.eat(b'_') {
            return Ok(RawPart::Plain(size));
        }
        if self.eat(b'{') {
            let first = self.int()?;
            if !self.eat(b',') {
                return Err(self.err("expected ',' in spot pair"));
            }
            let second = self.int()?;
            if !self.eat(b'}') {
                return Err(self.err("expected '}' closing spot pair"));
            }
            Ok(RawPart::Spotted(size, first, second))
        } else {
            let color = self.int()?;
            Ok(RawPart::Colored(size, color))
        }
    }

    fn composition(&mut self) -> Result<Vec<RawPart>, CompError> {
        let mut parts = Vec::new();
        self.skip_ws();
        parts.push(self.part()?);
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                self.skip_ws();
                parts.push(self.part()?);
            } else if self.pos == self.bytes.len() {
                return Ok(parts);
            } else {
                return Err(self.err("expected '+' or end of input"));
            }
        }
    }
}

impl FromStr for ColoredComposition {
    type Err = CompError;

    fn from_str(s: &str) -> Result<Self, CompError> {
        let raw = Scanner::new(s).composition()?;
        let parts = raw
            .into_iter()
            .map(|p| match p {
                RawPart::Plain(size) => Part::uncolored(size),
                RawPart::Colored(size, color) => Part::colored(size, color),
                RawPart::Spotted(..) => Err(CompError::Parse {
                    at: 0,
                    what: "spot pairs cannot appear in a colored composition".to_string(),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        ColoredComposition::new(parts)
    }
}

impl FromStr for ChooseTwoComposition {
    type Err = CompError;

    fn from_str(s: &str) -> Result<Self, CompError> {
        let raw = Scanner::new(s).composition()?;
        let parts = raw
            .into_iter()
            .map(|p| match p {
                RawPart::Spotted(size, first, second) => SpottedPart::new(size, first, second),
                _ => Err(CompError::Parse {
                    at: 0,
                    what: "every part of a choose-two composition needs a spot pair".to_string(),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        ChooseTwoComposition::new(parts)
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.color() {
            Some(c) => write!(f, "{}_{}", self.size(), c),
            None => write!(f, "{}", self.size()),
        }
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl fmt::Display for SpottedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.spots();
        write!(f, "{}_{{{},{}}}", self.size(), a, b)
    }
}

impl fmt::Display for ChooseTwoComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PartJson {
    Spotted { size: u64, spots: [u64; 2] },
    Colored { size: u64, color: Option<u64> },
}

#[derive(Serialize, Deserialize)]
struct CompJson {
    total: u64,
    parts: Vec<PartJson>,
}

impl Serialize for ColoredComposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CompJson {
            total: self.total(),
            parts: self
                .parts()
                .iter()
                .map(|p| PartJson::Colored {
                    size: p.size(),
                    color: p.color(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColoredComposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CompJson::deserialize(d)?;
        let parts = raw
            .parts
            .into_iter()
            .map(|p| match p {
                PartJson::Colored { size, color } => {
                    Part::new(size, color).map_err(D::Error::custom)
                }
                PartJson::Spotted { .. } => Err(D::Error::custom(
                    "spot pairs cannot appear in a colored composition",
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let comp = ColoredComposition::new(parts).map_err(D::Error::custom)?;
        if comp.total() != raw.total {
            return Err(D::Error::custom(
                CompError::TotalMismatch {
                    declared: raw.total,
                    actual: comp.total(),
                }
                .to_string(),
            ));
        }
        Ok(comp)
    }
}

impl Serialize for ChooseTwoComposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CompJson {
            total: self.total(),
            parts: self
                .parts()
                .iter()
                .map(|p| PartJson::Spotted {
                    size: p.size(),
                    spots: [p.spots().0, p.spots().1],
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChooseTwoComposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CompJson::deserialize(d)?;
        let parts = raw
            .parts
            .into_iter()
            .map(|p| match p {
                PartJson::Spotted { size, spots } => {
                    SpottedPart::new(size, spots[0], spots[1]).map_err(D::Error::custom)
                }
                PartJson::Colored { .. } => Err(D::Error::custom(
                    "every part of a choose-two composition needs a spot pair",
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let comp = ChooseTwoComposition::new(parts).map_err(D::Error::custom)?;
        if comp.total() != raw.total {
            return Err(D::Error::custom(
                CompError::TotalMismatch {
                    declared: raw.total,
                    actual: comp.total(),
                }
                .to_string(),
            ));
        }
        Ok(comp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_text() {
        for s in ["1", "3_2+4+1+2_1+3+6+1_1", "1+2_2+1+6_4+4"] {
            let c: ColoredComposition = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        let ct: ChooseTwoComposition = "7_{3,4}+10_{5,7}".parse().unwrap();
        assert_eq!(ct.to_string(), "7_{3,4}+10_{5,7}");
    }

    #[test]
    fn whitespace_tolerated_on_input() {
        let c: ColoredComposition = " 1 + 2_2 ".parse().unwrap();
        assert_eq!(c.to_string(), "1+2_2");
    }

    #[test]
    fn rejects_malformed() {
        assert!("".parse::<ColoredComposition>().is_err());
        assert!("1+".parse::<ColoredComposition>().is_err());
        assert!("0".parse::<ColoredComposition>().is_err());
        assert!("3_4".parse::<ColoredComposition>().is_err());
        assert!("2_{1,2}".parse::<ColoredComposition>().is_err());
        assert!("1+2".parse::<ChooseTwoComposition>().is_err());
        assert!("2_{2,1}".parse::<ChooseTwoComposition>().is_err());
        assert!("1x2".parse::<ColoredComposition>().is_err());
    }

    #[test]
    fn json_shape() {
        let c: ColoredComposition = "1+2_2".parse().unwrap();
        let j = serde_json::to_value(&c).unwrap();
        assert_eq!(
            j,
            serde_json::json!({
                "total": 3,
                "parts": [{"size": 1, "color": null}, {"size": 2, "color": 2}]
            })
        );
        let back: ColoredComposition = serde_json::from_value(j).unwrap();
        assert_eq!(back, c);

        let ct: ChooseTwoComposition = "2_{1,2}".parse().unwrap();
        let j = serde_json::to_value(&ct).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"total": 2, "parts": [{"size": 2, "spots": [1, 2]}]})
        );
        let back: ChooseTwoComposition = serde_json::from_value(j).unwrap();
        assert_eq!(back, ct);
    }

    #[test]
    fn json_total_must_match() {
        let bad = serde_json::json!({"total": 4, "parts": [{"size": 1, "color": null}]});
        assert!(serde_json::from_value::<ColoredComposition>(bad).is_err());
    }
}
