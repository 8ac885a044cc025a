import tomli_w

from bifront.models import DelayReport


def encode(report: DelayReport) -> str:
    """Write a delay benchmark report as TOML."""
    return tomli_w.dumps(report.model_dump(mode="json"))
