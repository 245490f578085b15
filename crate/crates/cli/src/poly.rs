//! Parser for integer polynomials in `t`, the input language of the
//! representation-ring calculator. Accepted terms: integers, `t`,
//! `t^k`, with an optional integer coefficient and optional `*` between
//! coefficient and `t`. Exponents reduce modulo 4 (the ring relation
//! t^4 = 1). Examples: `1 - t + 2t^2`, `-3*t^3`, `t^5 + 4`.

use spinform::RGElement;

/// Parses a polynomial into its canonical ring element.
pub fn parse(input: &str) -> Result<RGElement, String> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".to_string());
    }
    let mut coeffs = [0i64; 4];
    let bytes = compact.as_bytes();
    let mut pos = 0usize;
    let mut first = true;
    while pos < bytes.len() {
        // Sign (mandatory between terms, optional on the first).
        let mut sign = 1i64;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1;
                pos += 1;
            }
            _ if first => {}
            other => {
                return Err(format!(
                    "expected '+' or '-' before a term, found {:?}",
                    other as char
                ))
            }
        }
        first = false;
        // Optional integer coefficient.
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: i64 = if pos > digits_start {
            compact[digits_start..pos]
                .parse::<i64>()
                .map_err(|e| format!("bad coefficient: {e}"))?
        } else {
            1
        };
        // Optional '*' then 't' with optional '^exp'.
        let mut exponent = 0u32;
        let mut has_t = false;
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b't' {
                return Err("expected 't' after '*'".to_string());
            }
        }
        if pos < bytes.len() && bytes[pos] == b't' {
            has_t = true;
            exponent = 1;
            pos += 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let exp_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == exp_start {
                    return Err("expected an exponent after '^'".to_string());
                }
                exponent = compact[exp_start..pos]
                    .parse::<u32>()
                    .map_err(|e| format!("bad exponent: {e}"))?;
            }
        }
        if pos == digits_start && !has_t {
            return Err(match bytes.get(pos) {
                Some(&b) => format!("unexpected character {:?} in polynomial", b as char),
                None => "dangling sign at the end of the polynomial".to_string(),
            });
        }
        let slot = (exponent % 4) as usize;
        coeffs[slot] = coeffs[slot]
            .checked_add(sign * coeff)
            .ok_or_else(|| "coefficient overflow".to_string())?;
    }
    Ok(RGElement::from_i64(coeffs))
}
