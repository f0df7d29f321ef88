use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq)]
#[error("score {0} outside [-1, 1]")]
pub struct ScoreOutOfRange(pub f64);

/// Win probability of a mean reward on the [-1, 1] scale.
pub fn to_probability(score: f64) -> Result<f64, ScoreOutOfRange> {
    if !(-1.0..=1.0).contains(&score) {
        return Err(ScoreOutOfRange(score));
    }
    Ok((score + 1.0) / 2.0)
}

/// Like [`to_probability`], clamping stray rounding error.
pub(crate) fn probability(score: f64) -> f64 {
    (score.clamp(-1.0, 1.0) + 1.0) / 2.0
}

/// A probability (or probability difference) as a percentage with two
/// decimals, rounding halves up. Binary noise below 1e-6 of a hundredth is
/// snapped away first so that e.g. 0.55555 prints as 55.56.
pub fn format_percent(p: f64) -> String {
    let hundredths = p * 1e4;
    let snapped = (hundredths * 1e6).round() / 1e6;
    let r = snapped.round();
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{:.2}", r / 100.0)
}

/// Fixed-point number without a negative zero.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}
