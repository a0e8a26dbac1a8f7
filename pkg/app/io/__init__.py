"""Config parsing and artifact writers."""
from app.io.config_parser import dump_config, parse_config
from app.io.writers import emit_csv, emit_json, render_csv

__all__ = ["dump_config", "emit_csv", "emit_json", "parse_config", "render_csv"]
