//! Text form of sweep certificates.
//!
//! ```text
//! n=<n>
//! <initial word>
//! <predicate name>
//! <move>
//! ...
//! VALID          (appended only after a successful replay)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::band::{parse_band_word, BandError, BandWord};
use crate::rewriting::Move;

pub const VALID_MARKER: &str = "VALID";

/// A replayable witness: starting at `initial`, the moves (exactly `k`
/// of them cyclings) lead back to `initial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCertificate {
    pub initial: BandWord,
    pub predicate: String,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line 2: {0}")]
    Word(#[source] BandError),
}

/// A parsed certificate file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFile {
    pub certificate: SweepCertificate,
    /// Whether the file already carried the trailing `VALID` line.
    pub marked_valid: bool,
}

impl SweepCertificate {
    pub fn cycle_count(&self) -> usize {
        self.moves.iter().filter(|m| m.is_cycle()).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={}\n{}\n{}\n",
            self.initial.strands(),
            self.initial,
            self.predicate
        );
        for m in &self.moves {
            writeln!(out, "{m}").unwrap();
        }
        out
    }

    /// The certificate text followed by the `VALID` line.
    pub fn to_validated_text(&self) -> String {
        let mut out = self.to_text();
        out.push_str(VALID_MARKER);
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<CertificateFile, CertificateFormatError> {
        let malformed = |line: usize, message: &str| CertificateFormatError::Malformed {
            line,
            message: message.to_string(),
        };
        let mut lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
        while lines.last().is_some_and(|l| l.trim().is_empty()) {
            lines.pop();
        }
        let header = lines
            .first()
            .ok_or_else(|| malformed(1, "empty certificate"))?;
        let n: u32 = header
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| malformed(1, "expected `n=<strands>`"))?;
        let word = lines
            .get(1)
            .ok_or_else(|| malformed(2, "missing initial word"))?;
        let initial = parse_band_word(word, n).map_err(CertificateFormatError::Word)?;
        let predicate = lines
            .get(2)
            .map(|l| l.trim())
            .filter(|l| !l.is_empty())
            .ok_or_else(|| malformed(3, "missing predicate name"))?
            .to_string();
        let mut body = &lines[3..];
        let marked_valid = body.last().is_some_and(|l| l.trim() == VALID_MARKER);
        if marked_valid {
            body = &body[..body.len() - 1];
        }
        let moves = body
            .iter()
            .enumerate()
            .map(|(i, l)| {
                l.trim()
                    .parse::<Move>()
                    .map_err(|e| malformed(i + 4, &e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CertificateFile {
            certificate: SweepCertificate {
                initial,
                predicate,
                moves,
            },
            marked_valid,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SweepCertificate {
        SweepCertificate {
            initial: parse_band_word("a(3,2) a(2,1)", 3).unwrap(),
            predicate: "adjacent-first".into(),
            moves: vec![
                Move::Triple {
                    position: 0,
                    target: 1,
                },
                Move::Cycle,
                Move::Cycle,
            ],
        }
    }

    #[test]
    fn text_layout() {
        assert_eq!(
            sample().to_text(),
            "n=3\na(3,2) a(2,1)\nadjacent-first\nT@0>1\nR\nR\n"
        );
        assert!(sample().to_validated_text().ends_with("R\nVALID\n"));
    }

    #[test]
    fn parse_round_trip() {
        let parsed = SweepCertificate::parse(&sample().to_text()).unwrap();
        assert_eq!(parsed.certificate, sample());
        assert!(!parsed.marked_valid);
        let parsed = SweepCertificate::parse(&sample().to_validated_text()).unwrap();
        assert_eq!(parsed.certificate, sample());
        assert!(parsed.marked_valid);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            SweepCertificate::parse(""),
            Err(CertificateFormatError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            SweepCertificate::parse("n=x\n"),
            Err(CertificateFormatError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            SweepCertificate::parse("n=3\na(4,1)\nany\n"),
            Err(CertificateFormatError::Word(_))
        ));
        assert!(matches!(
            SweepCertificate::parse("n=3\na(2,1)\n"),
            Err(CertificateFormatError::Malformed { line: 3, .. })
        ));
        assert!(matches!(
            SweepCertificate::parse("n=3\na(2,1)\nany\nR\nQ@1\n"),
            Err(CertificateFormatError::Malformed { line: 5, .. })
        ));
    }
}
