"""
Report Formatting

Serializes search records and check reports as CSV, JSON lines and Markdown,
and renders Markdown to PDF with fpdf2.
"""

import csv
import io
import json
import re
from datetime import datetime
from pathlib import Path

from fpdf import FPDF

from .explorer import CSV_COLUMNS, CheckReport, SearchRecord

# Symbols outside latin-1 that reports may contain
_PDF_REPLACEMENTS = {
    "•": "-",
    "’": "'",
    "“": '"',
    "”": '"',
    "–": "-",
    "…": "...",
    "≤": "<=",
    "≥": ">=",
    "Φ": "Phi",
    "γ": "gamma",
    "ℓ": "ell",
    "Δ": "Delta",
}


def records_to_csv(records: list[SearchRecord]) -> str:
    """CSV with a header row and one row per record."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.csv_row())
    return buffer.getvalue()


def to_json_lines(items) -> str:
    """One compact JSON object per line, from each item's to_dict()."""
    return "".join(json.dumps(item.to_dict(), separators=(",", ":")) + "\n" for item in items)


def format_records_table(records: list[SearchRecord]) -> str:
    """Markdown table of records."""
    lines = [
        "| r | x | ell | Kronecker | h* factorization | g factorization | family |",
        "|---|---|-----|-----------|------------------|-----------------|--------|",
    ]
    for rec in records:
        row = rec.csv_row()
        lines.append(
            f"| {row['r']} | {row['x']} | {row['ell']} | {row['kronecker']} | "
            f"{row['hstar_factorization'] or '-'} | {row['g_factorization'] or '-'} | {row['family_tag']} |"
        )
    return "\n".join(lines)


def format_markdown_report(
    title: str,
    reports: list[CheckReport],
    records: list[SearchRecord] | None = None,
    parameters: dict | None = None,
) -> str:
    """
    Markdown summary of one or more checks.

    Args:
        title: Report heading.
        reports: Check reports, one section each.
        records: Optional search records, tabulated at the end.
        parameters: Optional sweep bounds, listed under the heading.

    Returns:
        Markdown text.
    """
    today = datetime.now().strftime("%B %d, %Y")
    lines = [f"# {title}", "", f"**Date:** {today}", ""]
    if parameters:
        lines.append("## Parameters")
        lines.extend(f"- **{name}:** {value}" for name, value in parameters.items())
        lines.append("")

    lines += ["## Summary", "", "| Check | Result | Checks | Failures |", "|-------|--------|--------|----------|"]
    for rep in reports:
        lines.append(f"| {rep.name} | {'OK' if rep.ok else 'FAIL'} | {rep.checks} | {len(rep.failures)} |")
    lines.append("")

    for rep in reports:
        if rep.failures or rep.notes:
            lines.append(f"### {rep.name}")
            lines.extend(f"- {detail}" for detail in rep.failures[:50])
            lines.extend(f"- note: {note}" for note in rep.notes)
            lines.append("")

    if records:
        lines += ["## Records", "", format_records_table(records), ""]
    return "\n".join(lines)


def _sanitize(text: str) -> str:
    for char, replacement in _PDF_REPLACEMENTS.items():
        text = text.replace(char, replacement)
    return text.encode("latin-1", errors="replace").decode("latin-1")


def write_pdf(content: str, output_path: str | Path) -> str:
    """
    Render Markdown to PDF.

    Handles #/##/### headings, "- " bullets, tables (monospaced) and bold
    markers; other lines are set as plain paragraphs.

    Returns:
        The path to the generated PDF.
    """
    pdf = FPDF()
    pdf.set_auto_page_break(auto=True, margin=15)
    pdf.set_margins(left=15, top=15, right=15)
    pdf.add_page()
    pdf.set_font("Helvetica", "", 10)

    headings = {"### ": (12, 6), "## ": (14, 7), "# ": (18, 9)}
    for line in content.split("\n"):
        line = line.rstrip()
        if not line:
            pdf.ln(4)
            continue

        prefix = next((p for p in headings if line.startswith(p)), None)
        if prefix:
            size, height = headings[prefix]
            pdf.set_font("Helvetica", "B", size)
            pdf.ln(height)
            pdf.multi_cell(0, height, _sanitize(line[len(prefix):]), new_x="LMARGIN", new_y="NEXT")
            pdf.ln(2)
        elif line.startswith("|"):
            if set(line) <= set("|-: "):
                continue
            pdf.set_font("Courier", "", 8)
            pdf.multi_cell(0, 4, _sanitize(line.replace("|", " | ").strip()), new_x="LMARGIN", new_y="NEXT")
        else:
            pdf.set_font("Helvetica", "", 10)
            text = re.sub(r"\*\*(.+?)\*\*", r"\1", line)
            if text.startswith("- "):
                text = f"  - {text[2:]}"
            pdf.multi_cell(0, 5, _sanitize(text), new_x="LMARGIN", new_y="NEXT")

    pdf.output(str(output_path))
    return str(output_path)


def write_output(text: str, out: str | Path, markdown: str | None = None) -> str:
    """
    Write a result to a file; a .pdf path gets the Markdown rendering.

    Returns:
        The path written.
    """
    path = Path(out)
    if path.suffix.lower() == ".pdf":
        return write_pdf(markdown if markdown is not None else text, path)
    path.write_text(text if text.endswith("\n") else text + "\n")
    return str(path)
