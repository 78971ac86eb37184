import logging

from django.core.management.base import CommandError

from symmetry.cli import EXIT_BUDGET, EXIT_FAILURE, EXIT_USAGE, SymmetryCommand
from symmetry.models import VerificationRun
from symmetry.theorem_suite import ClaimId, SuiteConfig, is_budget_error, run_all

logger = logging.getLogger(__name__)


class Command(SymmetryCommand):
    help = "Check the symmetry claims on every in-cap instance; exit 0 iff all pass."

    def add_arguments(self, parser):
        parser.add_argument("claims", nargs="*", metavar="CLAIM", help="Claim ids to check.")
        parser.add_argument("--all", action="store_true", help="Check every claim (the default).")
        parser.add_argument("--max-n", type=int, dest="max_n")
        parser.add_argument("--budget", type=int)
        parser.add_argument("--seed", type=int)
        parser.add_argument("--samples", type=int, help="Random group elements per sampled check.")
        parser.add_argument("--workers", type=int)
        parser.add_argument("--json", action="store_true", help="One JSON record per line.")
        parser.add_argument("--timings", action="store_true", help="Include elapsed microseconds.")
        parser.add_argument("--save", action="store_true", help="Persist the run to the database.")

    def handle(self, *args, **options):
        claims = self.parse_claims(options["claims"], options["all"])
        if options["max_n"] is not None and options["max_n"] < 0:
            raise CommandError("--max-n must be non-negative.", returncode=EXIT_USAGE)
        if options["workers"] is not None and options["workers"] < 1:
            raise CommandError("--workers must be at least 1.", returncode=EXIT_USAGE)
        config = SuiteConfig.from_settings(
            max_n=options["max_n"],
            claims=claims,
            budget=options["budget"],
            seed=options["seed"],
            samples=options["samples"],
            lift_samples=options["samples"],
            workers=options["workers"],
        )
        reports = run_all(config)

        timings = options["timings"]
        for report in reports:
            if options["json"]:
                self.stdout.write(report.render_json(timings=timings))
            else:
                self.stdout.write(report.render_text(timings=timings))
        failed = sum(not r.passed for r in reports)
        if not options["json"]:
            self.stdout.write(f"{len(reports)} reports, {len(reports) - failed} passed, {failed} failed")

        if options["save"]:
            run = VerificationRun.record(reports, config)
            logger.info("saved verification run %s", run.pk)

        if any(is_budget_error(r) for r in reports):
            raise CommandError("Search budget exceeded on at least one instance.", returncode=EXIT_BUDGET)
        if failed:
            raise CommandError(f"{failed} claim check(s) failed.", returncode=EXIT_FAILURE)

    def parse_claims(self, names, check_all):
        if check_all or not names:
            return None
        unknown = [name for name in names if name not in ClaimId.values]
        if unknown:
            raise CommandError(
                f"Unknown claim id(s): {', '.join(unknown)}. "
                f"Valid ids: {', '.join(ClaimId.values)}.",
                returncode=EXIT_USAGE,
            )
        return frozenset(names)
