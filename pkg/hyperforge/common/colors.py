"""
Shared color scheme for hyperforge console output
"""

HYPERFORGE_COLORS = {
    "highlight1": "#E8A547",        # headings, counts
    "highlight2": "#4A90C2",        # names of forms and triples
    "highlight3": "#6B7280",        # secondary text
    "highlight4": "#2E8B8B",        # success lines
    "alert": "#EF4444",             # failures
    "warning": "#F59E0B",
    "accent": "#8B5CF6",            # structural class labels
}

# Style per structural class in summary tables
CLASS_STYLES = {
    "Hypersymplectic": HYPERFORGE_COLORS["highlight4"],
    "ParaHypersymplectic": HYPERFORGE_COLORS["highlight2"],
    "PositiveProduct": HYPERFORGE_COLORS["accent"],
    "NotEpsilonHypersymplectic": HYPERFORGE_COLORS["highlight3"],
}
