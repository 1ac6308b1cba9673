//! Class expressions on the command line: `x`, `2x`, `x-3y`, `q@2`, `5`.
//!
//! Names are looked up among the generators of `h₀` degree by degree; a
//! `@n` suffix pins the degree. A bare integer is a multiple of the unit
//! class in degree 0.

use qpa_core::qpa::HomologyRing;
use qpa_core::groups::Elem;

#[derive(Debug, PartialEq)]
struct Term {
    coeff: i64,
    name: Option<String>,
}

fn terms(s: &str) -> Result<Vec<Term>, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty class expression".into());
    }
    let mut out = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if !out.is_empty() {
            return Err(format!("expected '+' or '-' before '{rest}'"));
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (tok, tail) = rest.split_at(end);
        rest = tail;
        let digits = tok.find(|c: char| !c.is_ascii_digit()).unwrap_or(tok.len());
        let (num, name) = tok.split_at(digits);
        let name = name.strip_prefix('*').unwrap_or(name);
        let coeff: i64 = if num.is_empty() {
            if name.is_empty() {
                return Err(format!("dangling sign in '{s}'"));
            }
            1
        } else {
            num.parse().map_err(|_| format!("coefficient '{num}' out of range"))?
        };
        out.push(Term { coeff: sign * coeff, name: (!name.is_empty()).then(|| name.to_string()) });
    }
    Ok(out)
}

fn locate(ring: &HomologyRing, name: &str) -> Result<(usize, usize), String> {
    let (name, pinned) = match name.split_once('@') {
        Some((n, d)) => (n, Some(d.parse::<usize>().map_err(|_| format!("bad degree in '{name}@{d}'"))?)),
        None => (name, None),
    };
    let degrees: Vec<usize> = match pinned {
        Some(d) if d > ring.top() => return Err(format!("degree {d} exceeds the truncation {}", ring.top())),
        Some(d) => vec![d],
        None => (0..=ring.top()).collect(),
    };
    degrees
        .into_iter()
        .find_map(|d| ring.h0(d).index_of(name).map(|i| (d, i)))
        .ok_or_else(|| format!("no generator named '{name}' in h0"))
}

/// Parses an expression into a degree and an element of `h₀` there.
pub fn parse_class(ring: &HomologyRing, s: &str) -> Result<(usize, Elem), String> {
    let mut degree = None;
    let mut coords: Vec<(usize, usize, i64)> = Vec::new();
    for t in terms(s)? {
        let (d, i) = match &t.name {
            Some(n) => locate(ring, n)?,
            None => {
                if ring.h0(0).rank() != 1 {
                    return Err("bare integers need a cyclic h0 in degree 0".into());
                }
                (0, 0)
            }
        };
        match degree {
            Some(e) if e != d => return Err(format!("'{s}' mixes degrees {e} and {d}")),
            _ => degree = Some(d),
        }
        coords.push((d, i, t.coeff));
    }
    let d = degree.unwrap_or(0);
    let g = ring.h0(d);
    let mut v = vec![0i64; g.rank()];
    for (_, i, c) in coords {
        v[i] = v[i].checked_add(c).ok_or("coefficient overflow")?;
    }
    Ok((d, g.from_ints(&v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qpa_core::instances::builtin;

    #[test]
    fn splits_terms() {
        let t = terms("2x - y+3").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0], Term { coeff: 2, name: Some("x".into()) });
        assert_eq!(t[1], Term { coeff: -1, name: Some("y".into()) });
        assert_eq!(t[2], Term { coeff: 3, name: None });
        assert!(terms("").is_err());
        assert!(terms("x-").is_err());
    }

    #[test]
    fn integers_live_in_degree_zero() {
        let inst = builtin("zsigma").unwrap();
        let ring = HomologyRing::algebra(&inst.qpa).unwrap();
        let (d, a) = parse_class(&ring, "2").unwrap();
        assert_eq!(d, 0);
        assert_eq!(ring.h0(0).format(&a), ring.h0(0).format(&ring.h0(0).from_ints(&[2])));
    }

    #[test]
    fn names_find_their_degree() {
        let inst = builtin("lambda-z").unwrap();
        let ring = HomologyRing::algebra(&inst.qpa).unwrap();
        let (d, _) = parse_class(&ring, "x").unwrap();
        assert_eq!(d, 1);
        assert!(parse_class(&ring, "x+1").is_err());
        assert!(parse_class(&ring, "nope").is_err());
    }
}
