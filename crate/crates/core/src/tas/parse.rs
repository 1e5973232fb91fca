use crate::path::Direction;

use super::{Glue, Tas, TasError, TileType};

/// Parse the line-oriented TAS format:
///
/// ```text
/// # comment
/// seed σ S=s
/// tile A N=s E=b S=c W=a
/// ```
///
/// `-` or an omitted side is the null glue.
pub fn parse_tas(text: &str) -> Result<Tas, TasError> {
    let mut tiles = Vec::new();
    let mut seed = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = tokens_with_columns(body);
        let Some((col, kind)) = tokens.next() else {
            continue;
        };
        let err = |column: usize, message: String| TasError::SyntaxError {
            line,
            column,
            message,
        };
        let is_seed = match kind {
            "tile" => false,
            "seed" => true,
            other => {
                return Err(err(
                    col,
                    format!("expected `tile` or `seed`, found {other:?}"),
                ))
            }
        };
        let (ncol, name) = tokens
            .next()
            .ok_or_else(|| err(col + kind.len(), "missing tile name".into()))?;
        if name.contains('=') {
            return Err(err(ncol, format!("expected a tile name, found {name:?}")));
        }
        let mut glues: [Option<Glue>; 4] = Default::default();
        for (gcol, tok) in tokens {
            let (side, glue) = tok
                .split_once('=')
                .ok_or_else(|| err(gcol, format!("expected SIDE=GLUE, found {tok:?}")))?;
            let d = match side {
                "N" => Direction::N,
                "E" => Direction::E,
                "S" => Direction::S,
                "W" => Direction::W,
                _ => return Err(err(gcol, format!("unknown side {side:?}"))),
            };
            if glue.is_empty() {
                return Err(err(gcol + side.len() + 1, "empty glue".into()));
            }
            let slot = &mut glues[d.index()];
            if slot.is_some() {
                return Err(err(gcol, format!("side {side} given twice")));
            }
            *slot = Some(if glue == "-" {
                Glue::Null
            } else {
                Glue::named(glue)
            });
        }
        let tile = TileType::new(name, glues.map(Option::unwrap_or_default));
        if is_seed {
            if seed.is_some() {
                return Err(TasError::DuplicateSeed);
            }
            seed = Some(tile);
        } else {
            tiles.push(tile);
        }
    }
    Tas::new(tiles, seed.ok_or(TasError::MissingSeed)?)
}

/// Whitespace-separated tokens with 1-based character columns.
fn tokens_with_columns(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = s;
    let mut offset = 0usize;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest[..rest.len() - trimmed.len()].chars().count();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let col = offset + 1;
        offset += tok.chars().count();
        rest = &trimmed[end..];
        Some((col, tok))
    })
}
