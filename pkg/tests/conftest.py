from collections import OrderedDict

_criteria: "OrderedDict[str, dict]" = OrderedDict()


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props or report.when not in ("setup", "call"):
        return
    if report.when == "setup" and report.passed:
        return
    entry = _criteria.setdefault(props["criterion"], {"title": props.get("title", ""), "parts": []})
    entry["parts"].append((props.get("part", ""), report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key, entry in _criteria.items():
        failed = [p for p, outcome, _ in entry["parts"] if outcome != "passed"]
        seconds = sum(d for _, _, d in entry["parts"])
        status = "FAIL" if failed else "PASS"
        line = f"criterion {key}: {status}  {entry['title']}  ({seconds:.1f}s)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        tr.write_line(line)
