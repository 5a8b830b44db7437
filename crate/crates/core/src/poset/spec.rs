use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{claw, rectangle, trapezoid, triangle_delta, triangle_nabla, triangle_right, Poset, PosetError};

/// Command-line poset description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetSpec {
    Rect(usize, usize),
    Delta(usize),
    Nabla(usize),
    Tria(usize),
    Trap(usize, usize),
    Claw,
    File(PathBuf),
}

impl PosetSpec {
    pub fn build(&self) -> Result<Poset, PosetError> {
        match *self {
            PosetSpec::Rect(p, q) => rectangle(p, q),
            PosetSpec::Delta(p) => triangle_delta(p),
            PosetSpec::Nabla(p) => triangle_nabla(p),
            PosetSpec::Tria(p) => triangle_right(p),
            PosetSpec::Trap(p, s) => trapezoid(p, s),
            PosetSpec::Claw => Ok(claw()),
            PosetSpec::File(ref path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| PosetError::Malformed(format!("{}: {e}", path.display())))?;
                let value: serde_json::Value = serde_json::from_str(&text)
                    .map_err(|e| PosetError::Malformed(format!("{}: {e}", path.display())))?;
                Poset::from_json(&value)
            }
        }
    }
}

/// `rect:PxQ`, `delta:P`, `nabla:P`, `tria:P`, `trap:P,S`, `claw` or `file:PATH`.
impl FromStr for PosetSpec {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || {
            PosetError::BadParameters(format!(
                "`{s}` (expected rect:PxQ, delta:P, nabla:P, tria:P, trap:P,S, claw or file:PATH)"
            ))
        };
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let positive = |t: &str| num(t).and_then(|n| if n >= 1 { Ok(n) } else { Err(bad()) });
        if s == "claw" {
            return Ok(PosetSpec::Claw);
        }
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "rect" => {
                let (p, q) = arg.split_once('x').ok_or_else(bad)?;
                Ok(PosetSpec::Rect(positive(p)?, positive(q)?))
            }
            "delta" => Ok(PosetSpec::Delta(positive(arg)?)),
            "nabla" => Ok(PosetSpec::Nabla(positive(arg)?)),
            "tria" => Ok(PosetSpec::Tria(positive(arg)?)),
            "trap" => {
                let (p, s) = arg.split_once(',').ok_or_else(bad)?;
                let p = num(p)?;
                if p <= 1 {
                    return Err(bad());
                }
                Ok(PosetSpec::Trap(p, num(s)?))
            }
            "file" if !arg.is_empty() => Ok(PosetSpec::File(PathBuf::from(arg))),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for PosetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetSpec::Rect(p, q) => write!(f, "rect:{p}x{q}"),
            PosetSpec::Delta(p) => write!(f, "delta:{p}"),
            PosetSpec::Nabla(p) => write!(f, "nabla:{p}"),
            PosetSpec::Tria(p) => write!(f, "tria:{p}"),
            PosetSpec::Trap(p, s) => write!(f, "trap:{p},{s}"),
            PosetSpec::Claw => write!(f, "claw"),
            PosetSpec::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        for s in ["rect:2x3", "delta:3", "nabla:4", "tria:3", "trap:4,3", "claw", "file:x.json"] {
            assert_eq!(s.parse::<PosetSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed() {
        for s in ["rect:0x3", "rect:2", "rect:2x", "delta:0", "trap:1,0", "trap:4", "cube:2", "file:", ""] {
            assert!(s.parse::<PosetSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn builds() {
        assert_eq!("rect:2x3".parse::<PosetSpec>().unwrap().build().unwrap().len(), 6);
        assert_eq!("trap:4,3".parse::<PosetSpec>().unwrap().build().unwrap().len(), 4);
        assert!(PosetSpec::File("/nonexistent/p.json".into()).build().is_err());
    }
}
