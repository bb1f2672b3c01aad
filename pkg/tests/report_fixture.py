"""Hand-built match report used by the render golden tests."""

from __future__ import annotations

from camplens.compare import EntitySpec, MatchReport, SpaceSection
from camplens.lexicon import Polarity
from camplens.matching import MatchGroup, MatchKind


def _group(label, kind, polarity, members):
    members = tuple(sorted(members, key=lambda m: (m[1], m[0])))
    return MatchGroup(
        label=label,
        kind=kind,
        polarity=polarity,
        best_rank=min(r for _, r in members),
        occurrence_count=len(members),
        members=members,
    )


def fixed_report() -> MatchReport:
    entity = EntitySpec("erdogan", ("erdogan", "rte"), ("td_pro", "td_anti"))
    pro_groups = [
        _group("guzel", MatchKind.SENTIMENT, Polarity.POSITIVE,
               [("guzel", 96), ("guzzel", 301), ("guzell", 512)]),
        _group("erdogan", MatchKind.SUBSUMPTION, None,
               [("liderimerdogan", 117)]),
        _group("diktator", MatchKind.SENTIMENT, Polarity.NEGATIVE,
               [("diktator", 704), ("diktatore", 812), ("dikttator", 950),
                ("diktatorr", 1203), ("diktator", 1507), ("duktator", 1799)]),
    ]
    anti_groups = [
        _group("diktator", MatchKind.SENTIMENT, Polarity.NEGATIVE,
               [("diktator", 490), ("diktatore", 533), ("dikttator", 610),
                ("diktatorr", 929), ("duktator", 1144), ("diktatorler", 1463)]),
        _group("rte", MatchKind.SUBSUMPTION, None,
               [("krallrte", 612), ("rteci", 844)]),
        _group("guzel", MatchKind.SENTIMENT, Polarity.POSITIVE,
               [("guzel", 1066)]),
    ]
    report = MatchReport(entity=entity, k=2000, max_edit=1)
    report.spaces.append(SpaceSection(
        space="td_pro", groups=sorted(pro_groups, key=lambda g: (g.best_rank, g.kind.value, g.label)),
        positive_median_rank=96.0, negative_median_rank=704.0))
    report.spaces.append(SpaceSection(
        space="td_anti", groups=sorted(anti_groups, key=lambda g: (g.best_rank, g.kind.value, g.label)),
        positive_median_rank=1066.0, negative_median_rank=490.0))
    return report
