//! Ring descriptors: parsing and canonical text.
//!
//! Grammar: `int` | `bigint` | `primefield:<modulus>` |
//! `poly:<s>,<p>[:<base>]` where the base is `int`, `bigint` (default) or
//! `primefield:<modulus>`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Int,
    BigInt,
    PrimeField(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Int,
    BigInt,
    PrimeField(u64),
    Poly { s: usize, p: usize, base: BaseSpec },
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec, String> {
        match text {
            "int" => return Ok(RingSpec::Int),
            "bigint" => return Ok(RingSpec::BigInt),
            _ => {}
        }
        if let Some(rest) = text.strip_prefix("primefield:") {
            let m = rest.parse().map_err(|_| format!("bad prime modulus '{rest}'"))?;
            return Ok(RingSpec::PrimeField(m));
        }
        if let Some(rest) = text.strip_prefix("poly:") {
            let (dims, base) = match rest.split_once(':') {
                Some((dims, base_text)) => {
                    let base = match base_text {
                        "int" => BaseSpec::Int,
                        "bigint" => BaseSpec::BigInt,
                        _ => {
                            let m = base_text
                                .strip_prefix("primefield:")
                                .and_then(|m| m.parse().ok())
                                .ok_or_else(|| format!("bad polynomial base '{base_text}'"))?;
                            BaseSpec::PrimeField(m)
                        }
                    };
                    (dims, base)
                }
                None => (rest, BaseSpec::BigInt),
            };
            let (s, p) = dims
                .split_once(',')
                .ok_or_else(|| format!("polynomial ring needs 's,p', got '{dims}'"))?;
            let s = s.parse().map_err(|_| format!("bad variable count '{s}'"))?;
            let p = p.parse().map_err(|_| format!("bad degree '{p}'"))?;
            if s == 0 {
                return Err("polynomial rings need at least one variable".into());
            }
            return Ok(RingSpec::Poly { s, p, base });
        }
        Err(format!(
            "unknown ring '{text}' (expected int, bigint, primefield:<m> or poly:<s>,<p>[:<base>])"
        ))
    }

    pub fn descriptor(&self) -> String {
        match self {
            RingSpec::Int => "int".into(),
            RingSpec::BigInt => "bigint".into(),
            RingSpec::PrimeField(m) => format!("primefield:{m}"),
            RingSpec::Poly { s, p, base } => {
                let base = match base {
                    BaseSpec::Int => "int".to_string(),
                    BaseSpec::BigInt => "bigint".to_string(),
                    BaseSpec::PrimeField(m) => format!("primefield:{m}"),
                };
                format!("poly:{s},{p}:{base}")
            }
        }
    }
}
