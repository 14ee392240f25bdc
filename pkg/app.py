"""
ShiftLab - Main Streamlit Application
Explorer with 5 screens: Complex Inspector, DS Strings, Threshold Graphs, Graphical Complexes, Verification
"""

import pandas as pd
import streamlit as st

# Core imports
from core.complex_parser import ComplexFileParser, format_complex_text
from core.complexes import all_faces
from core.config import configure_logging, get_settings
from core.ds_string import (
    canonicalize,
    coloring_from_string,
    evaluate,
    is_one_star_per_dimension,
    label_from_string,
    parse_ds,
)
from core.errors import ShiftLabError
from core.graphical import (
    closed_neighborhood_complex,
    dominance_complex,
    independence_complex,
    neighborhood_complex,
)
from core.harness import run_theorem
from core.models import TheoremId
from core.storage import LocalStorage
from core.threshold import certify, creation_sequence, stuck_vertices
from core.validators import ComplexValidator


# Page config
st.set_page_config(
    page_title="ShiftLab - Shifted Complex Explorer",
    page_icon=None,
    layout="wide",
    initial_sidebar_state="expanded",
)

configure_logging()


# Initialize session state
def init_session_state():
    """Initialize all session state variables"""
    if "page" not in st.session_state:
        st.session_state.page = "inspector"

    if "storage" not in st.session_state:
        st.session_state.storage = LocalStorage()

    if "parser" not in st.session_state:
        st.session_state.parser = ComplexFileParser()

    if "report_history" not in st.session_state:
        st.session_state.report_history = []


init_session_state()


# Sidebar configuration
def render_sidebar():
    """Render sidebar with navigation and settings"""
    with st.sidebar:
        st.title("ShiftLab")
        st.caption("Shifted complexes and threshold graphs")

        st.divider()

        # Navigation
        st.subheader("Navigation")
        pages = {
            "inspector": "Complex Inspector",
            "strings": "DS Strings",
            "threshold": "Threshold Graphs",
            "graphical": "Graphical Complexes",
            "verify": "Verification",
        }

        for key, label in pages.items():
            if st.button(label, key=f"nav_{key}", use_container_width=True):
                st.session_state.page = key
                st.rerun()

        st.divider()

        # Stats
        st.subheader("Session Stats")
        st.metric("Reports Run", len(st.session_state.report_history))
        st.metric("Data Dir", get_settings().data_dir)


def show_complex(K, title: str = "Facets"):
    """Facet list plus the property checklist"""
    st.subheader(title)
    st.code(format_complex_text(K))

    checks = ComplexValidator().validate_complex(K)
    col1, col2 = st.columns(2)
    with col1:
        st.metric("Dimension", checks.dimension)
        st.write(f"f-vector: {tuple(checks.f_vector)}")
        st.write(f"Minimal nonfaces: {[list(f) for f in checks.minimal_nonfaces]}")
    with col2:
        table = pd.DataFrame(
            [
                {"property": name, "holds": getattr(checks, f"is_{name}")}
                for name in ["pure", "flag", "balanced", "pencil", "shifted", "order_ideal"]
            ]
        )
        st.dataframe(table, use_container_width=True, hide_index=True)

    if checks.shifted_labeling:
        st.success(f"Shifted labeling: {checks.shifted_labeling.ranks}")
    if checks.balanced_coloring:
        st.info(f"Balanced coloring: {checks.balanced_coloring.colors}")
    for issue in checks.issues:
        st.caption(issue)


# Page 1: Complex Inspector
def page_inspector():
    """Paste a complex and see its properties"""
    st.title("Complex Inspector")

    text = st.text_area(
        "Facets (one per line, optional n=<k> header)",
        value="n=4\n1 2 3\n1 4\n2 4\n",
        height=160,
    )

    if st.button("Inspect", type="primary"):
        try:
            K = st.session_state.parser.parse_complex_text(text)
        except ShiftLabError as e:
            st.error(f"Parse error: {e}")
            return
        show_complex(K)

        faces = all_faces(K)[1:]
        with st.expander(f"All {len(faces)} nonempty faces"):
            st.write(", ".join("".join(str(v) for v in f) for f in faces))


# Page 2: DS Strings
def page_strings():
    """Parse, canonicalize and evaluate construction strings"""
    st.title("DS Strings")

    text = st.text_input("Construction string", value="DDSS|SSD|S")

    if st.button("Evaluate", type="primary"):
        try:
            s = parse_ds(text)
        except ShiftLabError as e:
            st.error(f"Parse error: {e}")
            return

        labels = label_from_string(s)
        st.write(f"Canonical form: `{canonicalize(s).render()}`")
        st.dataframe(
            pd.DataFrame(
                {
                    "created": list(range(1, s.vertex_count + 1)),
                    "label": [labels.rank(i) for i in range(1, s.vertex_count + 1)],
                }
            ),
            hide_index=True,
        )

        K = evaluate(s)
        show_complex(K, "Evaluated complex")

        if is_one_star_per_dimension(s):
            st.info(f"Block coloring: {coloring_from_string(s).colors}")


# Page 3: Threshold Graphs
def page_threshold():
    """Recognize threshold graphs and print their certificate"""
    st.title("Threshold Graphs")

    text = st.text_area("Edges (one \"u v\" per line, optional n=<k> header)", value="n=3\n1 2\n2 3\n")

    if st.button("Certify", type="primary"):
        try:
            G = st.session_state.parser.parse_graph_text(text)
        except ShiftLabError as e:
            st.error(f"Parse error: {e}")
            return

        sequence = creation_sequence(G)
        if sequence is None:
            st.warning(f"Not threshold: stuck on vertices {list(stuck_vertices(G))}")
            return

        certificate = certify(G)
        st.success(f"Threshold, creation string `{sequence.to_ds_string().render()}`")
        st.dataframe(
            pd.DataFrame(
                {
                    "vertex": list(certificate.weights),
                    "weight": list(certificate.weights.values()),
                }
            ),
            hide_index=True,
        )
        st.metric("Threshold t", certificate.threshold)


# Page 4: Graphical Complexes
def page_graphical():
    """Build I(G), D(G), N(G) and N[G] from a graph"""
    st.title("Graphical Complexes")

    text = st.text_area("Edges", value="n=4\n1 2\n2 3\n3 4\n")
    builders = {
        "Independence complex I(G)": independence_complex,
        "Dominance complex D(G)": dominance_complex,
        "Neighborhood complex N(G)": neighborhood_complex,
        "Closed neighborhood complex N[G]": closed_neighborhood_complex,
    }
    choice = st.selectbox("Complex", list(builders))

    if st.button("Build", type="primary"):
        try:
            G = st.session_state.parser.parse_graph_text(text)
            K = builders[choice](G)
        except ShiftLabError as e:
            st.error(f"Error: {e}")
            return
        show_complex(K, choice)


# Page 5: Verification
def page_verify():
    """Run theorem sweeps and export reports"""
    st.title("Verification")

    settings = get_settings()
    col1, col2, col3 = st.columns(3)
    with col1:
        theorem = st.selectbox("Theorem", [t.value for t in TheoremId])
    with col2:
        bound = st.number_input("Bound n", min_value=1, max_value=7, value=settings.graph_bound)
    with col3:
        jobs = st.number_input("Workers", min_value=1, max_value=32, value=settings.jobs)

    if st.button("Run", type="primary"):
        with st.spinner("Sweeping..."):
            try:
                report = run_theorem(theorem, bound=int(bound), jobs=int(jobs))
            except ShiftLabError as e:
                st.error(f"Error: {e}")
                return

        st.session_state.report_history.append(report)
        path = st.session_state.storage.save_report(report)

        if report.passed or report.theorem is TheoremId.HOPE:
            st.success(f"Checked {report.checked} instances in {report.elapsed_ms} ms")
        else:
            st.error(f"{len(report.counterexamples)} counterexample(s)")
        if report.tallies:
            st.dataframe(
                pd.DataFrame(list(report.tallies.items()), columns=["tally", "count"]),
                hide_index=True,
            )
        if report.counterexamples:
            st.dataframe(
                pd.DataFrame([c.model_dump() for c in report.counterexamples]),
                use_container_width=True,
                hide_index=True,
            )
        st.caption(f"Saved to {path}")

    st.divider()

    st.subheader("Saved Reports")
    reports = st.session_state.storage.list_reports()
    if reports:
        for filename in reports:
            st.text(f"File: {filename}")
    else:
        st.info("No reports saved yet.")

    if st.button("Export All Reports (ZIP)"):
        with st.spinner("Creating export bundle..."):
            for report in st.session_state.report_history:
                st.session_state.storage.export_to_markdown(report)
            zip_path = st.session_state.storage.create_export_zip()
            st.success(f"Export created at: {zip_path}")


# Router
render_sidebar()

if st.session_state.get("page") == "inspector":
    page_inspector()
elif st.session_state.get("page") == "strings":
    page_strings()
elif st.session_state.get("page") == "threshold":
    page_threshold()
elif st.session_state.get("page") == "graphical":
    page_graphical()
elif st.session_state.get("page") == "verify":
    page_verify()
