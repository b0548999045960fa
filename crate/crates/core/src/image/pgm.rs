//! PGM reader (P5 binary and P2 ASCII, maxval 255) and P5 writer.

use std::fs;
use std::path::Path;

use super::GrayImage;
use crate::error::{Error, Result};

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    /// Skips whitespace and `#` comments.
    fn skip_space(&mut self) {
        while let Some(&b) = self.data.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.skip_space();
        let start = self.pos;
        while self.data.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.data.get(self.pos) {
                None => self.error(format!("unexpected end of data reading {what}")),
                Some(_) => self.error(format!("expected a decimal number for {what}")),
            };
        }
        let text = std::str::from_utf8(&self.data[start..self.pos]).unwrap_or_default();
        text.parse().or_else(|_| {
            self.pos = start;
            self.error(format!("{what} does not fit in an integer"))
        })
    }
}

pub fn decode_pgm(data: &[u8]) -> Result<GrayImage> {
    let mut cur = Cursor { data, pos: 0 };
    let binary = match data.get(..2) {
        Some(b"P5") => true,
        Some(b"P2") => false,
        _ => return cur.error("missing P5/P2 magic"),
    };
    cur.pos = 2;
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    let maxval_pos = cur.pos;
    let maxval = cur.number("maxval")?;
    if maxval != 255 {
        cur.pos = maxval_pos;
        return cur.error(format!("maxval must be 255, got {maxval}"));
    }
    if width == 0 || height == 0 {
        return cur.error(format!(
            "image dimensions must be positive, got {width}x{height}"
        ));
    }
    let count = width.checked_mul(height).ok_or_else(|| Error::Parse {
        offset: cur.pos,
        message: "image dimensions overflow".into(),
    })?;

    let pixels = if binary {
        match cur.data.get(cur.pos) {
            Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
            Some(_) => return cur.error("expected whitespace after maxval"),
            None => return cur.error("truncated data: no pixel payload"),
        }
        let payload = &data[cur.pos..];
        if payload.len() < count {
            cur.pos = data.len();
            return cur.error(format!(
                "truncated data: expected {count} pixel bytes, found {}",
                payload.len()
            ));
        }
        payload[..count].to_vec()
    } else {
        let mut pixels = Vec::with_capacity(count);
        for i in 0..count {
            let start = {
                cur.skip_space();
                cur.pos
            };
            let v = cur.number(&format!("pixel {i}"))?;
            if v > 255 {
                cur.pos = start;
                return cur.error(format!("pixel value {v} exceeds maxval 255"));
            }
            pixels.push(v as u8);
        }
        pixels
    };
    GrayImage::new(width, height, pixels)
}

/// Binary P5 encoding with maxval 255.
pub fn encode_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.pixels());
    out
}

pub fn load_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    decode_pgm(&fs::read(path)?)
}

pub fn save_pgm(img: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, encode_pgm(img))?;
    Ok(())
}
