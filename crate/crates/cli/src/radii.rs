//! Radii from a file or an inline list.

use std::fmt;
use std::path::Path;

use critcover::geometry::DiskSet;

#[derive(Debug, Clone, PartialEq)]
pub struct RadiiError {
    /// 1-based; zero when the error is not tied to a position.
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for RadiiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for RadiiError {}

/// Reads `source` as a path when such a file exists, otherwise as the list itself.
pub fn read_radii(source: &str) -> Result<DiskSet, RadiiError> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| RadiiError { line: 0, column: 0, message: format!("{}: {e}", path.display()) })?;
        parse_radii(&text)
    } else {
        parse_radii(source)
    }
}

/// Parses comma- or newline-separated positive decimals. Blank lines and a
/// trailing comma are allowed; an empty field elsewhere is an error.
pub fn parse_radii(text: &str) -> Result<DiskSet, RadiiError> {
    let mut radii = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let mut column = 1;
        for (k, field) in fields.iter().enumerate() {
            let token = field.trim();
            let at = column + field.len() - field.trim_start().len();
            column += field.len() + 1;
            let err = |message: String| RadiiError { line: ln + 1, column: at, message };
            if token.is_empty() {
                if k + 1 == fields.len() && k > 0 {
                    continue;
                }
                return Err(err("empty field".into()));
            }
            let value: f64 = token.parse().map_err(|_| err(format!("`{token}` is not a number")))?;
            if !value.is_finite() || value <= 0.0 {
                return Err(err(format!("radius {token} is not positive and finite")));
            }
            radii.push(value);
        }
    }
    if radii.is_empty() {
        return Err(RadiiError { line: 0, column: 0, message: "no radii given".into() });
    }
    Ok(DiskSet::new(radii).expect("radii were checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_sums() {
        let d = parse_radii("1,0.5,0.25").unwrap();
        assert_eq!(d.radii(), &[1.0, 0.5, 0.25]);
        assert_eq!(d.weight(), 1.3125);
        let d = parse_radii("0.25\n1, 0.5,\n\n").unwrap();
        assert_eq!(d.radii(), &[1.0, 0.5, 0.25]);
    }

    #[test]
    fn rejects_non_positive_with_position() {
        let e = parse_radii("0,1").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_radii("0.5\n0.2,  -1").unwrap_err();
        assert_eq!((e.line, e.column), (2, 7));
        assert!(e.message.contains("not positive"));
    }

    #[test]
    fn rejects_garbage_and_empty_fields() {
        let e = parse_radii("0.5,abc").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(parse_radii("0.5,,0.2").is_err());
        assert!(parse_radii(",0.5").is_err());
        assert!(parse_radii("inf").is_err());
        assert!(parse_radii(" \n ").is_err());
    }

    #[test]
    fn large_file_matches_independent_sum() {
        let radii: Vec<f64> = (1..=100_000).map(|i| 1.0 / (i as f64).sqrt()).collect();
        let text = radii.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>().join("\n");
        let mut f = tempfile::NamedTempFile::new().unwrap();
        std::io::Write::write_all(&mut f, text.as_bytes()).unwrap();
        let d = read_radii(f.path().to_str().unwrap()).unwrap();
        assert_eq!(d.len(), 100_000);
        let expect: f64 = radii.iter().map(|r| r * r).sum();
        assert!((d.weight() - expect).abs() < 1e-9 * expect);
    }
}
