//! Text form of braid words: `s2^-3` is `σ_2^{-3}`, `t1` is `t_1`.
//!
//! ```text
//! word := ws* (term ws*)*
//! term := ('s' | 't') [1-9][0-9]* ('^' [+-]? [0-9]+)?
//! ws   := ' ' | '\t'
//! ```
//!
//! Errors carry the byte offset of the offending character.

use crate::error::{BraidError, Result};
use crate::word::{BraidWord, Letter};

/// Parses `text` as a word on `n` strands. The result is freely reduced.
pub fn parse(text: &str, n: usize) -> Result<BraidWord> {
    if n == 0 {
        return Err(BraidError::EmptyStrandCount);
    }
    let letters = tokenize(text)?;
    BraidWord::new(n, letters)
}

/// Canonical spacing: terms separated by single spaces, exponent 1 omitted.
pub fn print(word: &BraidWord) -> String {
    word.to_string()
}

fn err(offset: usize, message: impl Into<String>) -> BraidError {
    BraidError::Parse {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Letter>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let digits = |from: usize| {
        bytes[from..]
            .iter()
            .take_while(|b| b.is_ascii_digit())
            .count()
    };
    let number = |from: usize, len: usize| -> Result<u64> {
        text[from..from + len]
            .parse::<u64>()
            .map_err(|_| err(from, "number too large"))
    };

    while pos < bytes.len() {
        let b = bytes[pos];
        if b == b' ' || b == b'\t' {
            pos += 1;
            continue;
        }
        let start = pos;
        let sigma = match b {
            b's' => true,
            b't' => false,
            _ => {
                let c = text[pos..].chars().next().expect("pos is in bounds");
                return Err(err(pos, format!("expected 's' or 't', found {c:?}")));
            }
        };
        pos += 1;
        let len = digits(pos);
        if len == 0 {
            return Err(err(pos, "expected generator index"));
        }
        if bytes[pos] == b'0' {
            return Err(err(pos, "generator index must not start with 0"));
        }
        let index = usize::try_from(number(pos, len)?).map_err(|_| err(pos, "number too large"))?;
        pos += len;

        let mut exponent: i64 = 1;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            let negative = match bytes.get(pos) {
                Some(b'-') => {
                    pos += 1;
                    true
                }
                Some(b'+') => {
                    pos += 1;
                    false
                }
                _ => false,
            };
            let len = digits(pos);
            if len == 0 {
                return Err(err(pos, "expected exponent digits"));
            }
            let magnitude =
                i64::try_from(number(pos, len)?).map_err(|_| err(pos, "number too large"))?;
            if magnitude == 0 {
                return Err(err(start, "exponent must be nonzero"));
            }
            exponent = if negative { -magnitude } else { magnitude };
            pos += len;
        }
        out.push(if sigma {
            Letter::sigma(index, exponent)
        } else {
            Letter::tau(index, exponent)
        });
    }
    Ok(out)
}
