//! JSON layout shared by the instance and run files.
//!
//! Floats are written as `{:.16e}` (17 significant digits), which parses back
//! to the identical bits. Objects put one key per line; arrays of scalars stay
//! on one line and arrays of arrays or objects put one element per line, so a
//! matrix reads as one row per line.

use std::io::{self, Write};

use serde::{de::DeserializeOwned, Serialize};
use serde_json::ser::Formatter;

#[derive(Debug, Clone, Copy)]
enum Frame {
    Object { empty: bool },
    Array { empty: bool, nested: bool, fresh: bool },
}

#[derive(Debug, Default)]
pub(crate) struct Layout {
    stack: Vec<Frame>,
}

impl Layout {
    fn newline<W: ?Sized + Write>(&self, w: &mut W, depth: usize) -> io::Result<()> {
        w.write_all(b"\n")?;
        for _ in 0..depth {
            w.write_all(b"  ")?;
        }
        Ok(())
    }

    fn before_value<W: ?Sized + Write>(&mut self, w: &mut W, container: bool) -> io::Result<()> {
        let depth = self.stack.len();
        if let Some(Frame::Array { empty, nested, fresh }) = self.stack.last_mut() {
            if *fresh {
                if container {
                    *nested = true;
                    *fresh = false;
                    *empty = false;
                    return self.newline(w, depth);
                }
                if !*empty {
                    w.write_all(b" ")?;
                }
                *empty = false;
                *fresh = false;
            }
        }
        Ok(())
    }
}

impl Formatter for Layout {
    fn write_null<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.before_value(w, false)?;
        w.write_all(b"null")
    }

    fn write_bool<W: ?Sized + Write>(&mut self, w: &mut W, value: bool) -> io::Result<()> {
        self.before_value(w, false)?;
        w.write_all(if value { b"true" } else { b"false" })
    }

    fn write_u64<W: ?Sized + Write>(&mut self, w: &mut W, value: u64) -> io::Result<()> {
        self.before_value(w, false)?;
        write!(w, "{value}")
    }

    fn write_i64<W: ?Sized + Write>(&mut self, w: &mut W, value: i64) -> io::Result<()> {
        self.before_value(w, false)?;
        write!(w, "{value}")
    }

    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        self.before_value(w, false)?;
        write!(w, "{value:.16e}")
    }

    fn begin_string<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.before_value(w, false)?;
        w.write_all(b"\"")
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.before_value(w, true)?;
        self.stack.push(Frame::Array { empty: true, nested: false, fresh: false });
        w.write_all(b"[")
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        if let Some(Frame::Array { nested: true, .. }) = self.stack.pop() {
            self.newline(w, self.stack.len())?;
        }
        w.write_all(b"]")
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if !first {
            w.write_all(b",")?;
        }
        if let Some(Frame::Array { fresh, .. }) = self.stack.last_mut() {
            *fresh = true;
        }
        Ok(())
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.before_value(w, true)?;
        self.stack.push(Frame::Object { empty: true });
        w.write_all(b"{")
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        if let Some(Frame::Object { empty: false }) = self.stack.pop() {
            self.newline(w, self.stack.len())?;
        }
        w.write_all(b"}")
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if !first {
            w.write_all(b",")?;
        }
        if let Some(Frame::Object { empty }) = self.stack.last_mut() {
            *empty = false;
        }
        self.newline(w, self.stack.len())
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

pub(crate) fn to_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Layout::default());
    value.serialize(&mut ser).expect("in-memory JSON serialization cannot fail");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

/// Parses `text`, naming the offending field path and position on failure.
pub(crate) fn from_str<T: DeserializeOwned>(text: &str) -> Result<T, String> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        format!("field `{path}` at line {} column {}: {inner}", inner.line(), inner.column())
    })?;
    de.end().map_err(|e| format!("trailing data at line {} column {}", e.line(), e.column()))?;
    Ok(value)
}
