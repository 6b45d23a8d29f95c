//! JSON output with every float written to 17 significant digits.

use std::io;

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter, Serializer};

struct Digits17;

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn write_null<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        CompactFormatter.write_null(w)
    }
}

/// Rounds a finite `v` to 17 significant digits and drops trailing zeros.
///
/// Positional notation is used for decimal exponents in `-5..17`.
pub fn format_17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0.0".into() } else { "0.0".into() };
    }
    let sci = format!("{:.16e}", v.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integral exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let sign = if v < 0.0 { "-" } else { "" };
    if !(-5..17).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        let tail = if tail.is_empty() { "0" } else { tail };
        return format!("{sign}{head}.{tail}e{exp}");
    }
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        return format!("{sign}0.{zeros}{digits}");
    }
    let int_len = exp as usize + 1;
    if digits.len() <= int_len {
        format!("{sign}{digits}{}.0", "0".repeat(int_len - digits.len()))
    } else {
        format!("{sign}{}.{}", &digits[..int_len], &digits[int_len..])
    }
}

/// Compact JSON, followed by a newline.
pub fn to_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = Serializer::with_formatter(&mut buf, Digits17);
    value.serialize(&mut ser).expect("value serializes");
    buf.push(b'\n');
    String::from_utf8(buf).expect("json is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_values() {
        assert_eq!(format_17(0.76171875), "0.76171875");
        assert_eq!(format_17(0.1), "0.10000000000000001");
        assert_eq!(format_17(2.0), "2.0");
        assert_eq!(format_17(-1250.5), "-1250.5");
        assert_eq!(format_17(1e-7), "9.9999999999999995e-8");
        assert_eq!(format_17(2f64.powi(-20)), "9.5367431640625e-7");
        assert_eq!(format_17(0.000125), "0.000125");
        assert_eq!(format_17(3e20), "3.0e20");
    }

    #[test]
    fn json_uses_the_formatter() {
        let s = to_string(&serde_json::json!({ "a": [0.1, 1.0], "b": f64::NAN }));
        assert_eq!(s, "{\"a\":[0.10000000000000001,1.0],\"b\":null}\n");
    }

    proptest! {
        #[test]
        fn round_trips_exactly(bits in any::<u64>()) {
            let v = f64::from_bits(bits);
            prop_assume!(v.is_finite());
            let s = format_17(v);
            prop_assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits());
            let sig = s.trim_start_matches('-').split('e').next().unwrap()
                .chars().filter(char::is_ascii_digit).collect::<String>();
            prop_assert!(sig.trim_matches('0').len() <= 17, "{}", s);
        }
    }
}
