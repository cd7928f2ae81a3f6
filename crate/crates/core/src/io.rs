//! Text format for tensors.
//!
//! Line 1 holds the order d, line 2 the d extents, and the remaining lines
//! the entries in row-major order (last index fastest), whitespace separated.
//! Lines starting with `#` are comments and may appear anywhere.

use crate::error::{Error, Result};
use crate::tensor::Tensor;
use std::fmt::Write as _;
use std::path::Path;

/// Parses a tensor from the text format.
pub fn parse_tensor(text: &str) -> Result<Tensor> {
    // tokens tagged with their 1-based source line for error reporting
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            tokens.push((i + 1, tok));
        }
    }
    let mut pos = 0;
    let mut take = || -> Result<(usize, &str)> {
        let t = tokens.get(pos).copied().ok_or(Error::Parse {
            line: text.lines().count(),
            message: "unexpected end of file".into(),
        })?;
        pos += 1;
        Ok(t)
    };

    let (line, tok) = take()?;
    let order: usize = tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected tensor order, found '{tok}'"),
    })?;
    if order == 0 {
        return Err(Error::Parse {
            line,
            message: "order must be at least 1".into(),
        });
    }

    let mut shape = Vec::with_capacity(order);
    for _ in 0..order {
        let (line, tok) = take()?;
        let n: usize = tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("expected extent, found '{tok}'"),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line,
                message: "extents must be positive".into(),
            });
        }
        shape.push(n);
    }

    let len: usize = shape.iter().product();
    let mut data = Vec::with_capacity(len);
    for _ in 0..len {
        let (line, tok) = take()?;
        let v: f64 = tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("expected number, found '{tok}'"),
        })?;
        data.push(v);
    }
    if pos < tokens.len() {
        let (line, tok) = tokens[pos];
        return Err(Error::Parse {
            line,
            message: format!("trailing token '{tok}' after {len} entries"),
        });
    }
    Tensor::new(shape, data).map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })
}

pub fn read_tensor(path: &Path) -> Result<Tensor> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_tensor(&text)
}

/// Formats a tensor in the text format; values use the shortest
/// representation that round-trips through `f64` parsing.
pub fn format_tensor(t: &Tensor) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", t.order());
    let shape: Vec<String> = t.shape().iter().map(|n| n.to_string()).collect();
    let _ = writeln!(out, "{}", shape.join(" "));
    // one row (last mode) per line keeps files diffable
    let row = *t.shape().last().unwrap_or(&1);
    for chunk in t.data().chunks(row.max(1)) {
        let vals: Vec<String> = chunk.iter().map(|v| format!("{v}")).collect();
        let _ = writeln!(out, "{}", vals.join(" "));
    }
    out
}

pub fn write_tensor(path: &Path, t: &Tensor) -> Result<()> {
    std::fs::write(path, format_tensor(t)).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# a 2x2 matrix\n2\n2 2\n\n1 2\n# row two\n3 4\n";
        let t = parse_tensor(text).unwrap();
        assert_eq!(t.shape(), &[2, 2]);
        assert_eq!(t.data(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn reports_line_of_bad_token() {
        let text = "3\n2 2 2\n1 2 3 4 5 6 seven 8\n";
        match parse_tensor(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("seven"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_truncated_and_trailing() {
        assert!(parse_tensor("2\n2 2\n1 2 3\n").is_err());
        assert!(parse_tensor("2\n2 2\n1 2 3 4 5\n").is_err());
        assert!(parse_tensor("0\n").is_err());
    }

    #[test]
    fn round_trips_random_tensor() {
        let mut rng = SplitMix64::new(33);
        let t = Tensor::new(vec![2, 3, 2], rng.gaussian_vec(12)).unwrap();
        let u = parse_tensor(&format_tensor(&t)).unwrap();
        assert_eq!(t.shape(), u.shape());
        assert_eq!(t.data(), u.data());
    }
}
