# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.

import sys

from sympy import Rational

from lib.core.admissibility import globally_admissible, locally_admissible
from lib.core.data import options
from lib.core.decorators import timed
from lib.core.exceptions import QuadriliftError
from lib.core.localfactors import (
    UnramifiedDatum,
    partial_euler,
    residue_check,
    shell_sums,
    unramified_W,
    unramified_W_prime,
    unramified_pairing,
    verdict,
)
from lib.core.localfields import (
    hilbert,
    hilbert_oracle,
    hilbert_places,
    hilbert_product,
)
from lib.core.logger import enable_logging, logger
from lib.core.orthogroup import OrthogonalElement, cartan_dieudonne, spinor_norm, xi_eval
from lib.core.quadforms import (
    as_space,
    bad_places,
    complement_local,
    invariants,
    is_anisotropic_global,
    is_isometric_local,
    is_isotropic_local,
    local_invariants,
    represents_value_local,
    represents_value_oracle,
)
from lib.core.selftest import run_selftest
from lib.core.settings import EXIT_INPUT_ERROR, VERDICT_ISOMORPHIC
from lib.core.structures import CommandRequest, CommandResponse
from lib.core.weil_finite import weil_check
from lib.reports.html_report import HTMLReport
from lib.reports.json_report import JSONReport
from lib.reports.markdown_report import MarkdownReport
from lib.reports.plain_text_report import PlainTextReport
from lib.view.terminal import interface

REPORTS = {
    "json": JSONReport,
    "plain": PlainTextReport,
    "md": MarkdownReport,
    "html": HTMLReport,
}


def _strings(values):
    return [str(v) for v in values]


class Controller:
    def __init__(self):
        self.setup()

    def setup(self):
        if options["log_file"]:
            try:
                enable_logging()
                interface.log_file(options["log_file"])
            except OSError as e:
                interface.warning(f"Couldn't open the log file: {e}")

        self.report = REPORTS[options["output_format"]](options["output_file"])

    def run(self):
        request = CommandRequest(options["command"], options["arguments"])
        logger.info(f"Running {request.command}")

        try:
            response = self.dispatch(request)
        except QuadriliftError as e:
            logger.exception(e)
            interface.error(f"{type(e).__name__}: {e}")
            return EXIT_INPUT_ERROR

        try:
            self.output(response)
        except OSError as e:
            logger.exception(e)
            interface.error(f"Couldn't write the report: {e}")
            return EXIT_INPUT_ERROR

        label = response.payload.get("verdict") if response.command == "verdict" else None
        interface.verdict(response.command, response.positive, label)

        return response.exit_code

    @timed("Command")
    def dispatch(self, request):
        handler = getattr(self, "_" + request.command.replace("-", "_"))
        return handler(request.command, request.arguments)

    def output(self, response):
        if options["output_file"]:
            self.report.output_file = options["output_file"]
            self.report.save(response)
            interface.output_location(options["output_file"])
        else:
            sys.stdout.write(self.report.generate(response))
            sys.stdout.flush()

    def _hilbert(self, command, args):
        a, b, place = args["a"], args["b"], args["place"]

        if place is None:
            negative = {str(v) for v, _ in hilbert_product(a, b)}
            payload = {
                "places": {str(v): -1 if str(v) in negative else 1 for v in hilbert_places(a, b)},
                "negative_places": sorted(negative),
            }
            return CommandResponse(command, payload, len(negative) % 2 == 0)

        payload = {"place": str(place), "symbol": hilbert(a, b, place)}

        if args["oracle"]:
            payload["oracle"] = hilbert_oracle(a, b, place, slack=options["oracle_depth_slack"])
            return CommandResponse(command, payload, payload["oracle"] == payload["symbol"])

        return CommandResponse(command, payload)

    def _invariants(self, command, args):
        q, place = args["q"], args["place"]

        if place is not None:
            dim, disc, hasse = local_invariants(q, place)
            payload = {"place": str(place), "dim": dim, "disc": str(disc), "hasse": hasse}
        else:
            payload = invariants(q).to_dict()
            payload["anisotropic"] = is_anisotropic_global(q)
            payload["definite_high_dimension"] = q.dim >= 5 and 0 in q.signature

        payload["signature"] = list(q.signature)

        return CommandResponse(command, payload)

    def _isometric(self, command, args):
        result = is_isometric_local(args["q"], args["qp"], args["place"])
        return CommandResponse(command, {"place": str(args["place"]), "isometric": result}, result)

    def _isotropy(self, command, args):
        q, place = args["q"], args["place"]

        if place is not None:
            result = is_isotropic_local(q, place)
            return CommandResponse(command, {"place": str(place), "isotropic": result}, result)

        anisotropic = is_anisotropic_global(q)
        payload = {
            "anisotropic": anisotropic,
            "places": {str(v): is_isotropic_local(q, v) for v in bad_places(q)},
            "definite_high_dimension": q.dim >= 5 and 0 in q.signature,
        }

        return CommandResponse(command, payload, not anisotropic)

    def _represents(self, command, args):
        q, beta, place = args["q"], args["beta"], args["place"]
        payload = {"place": str(place)}

        if isinstance(beta, Rational):
            result = represents_value_local(q, beta, place)
            payload.update({"beta": str(beta), "represented": result})

            if args["oracle"]:
                payload["oracle"] = represents_value_oracle(
                    q, beta, place, slack=options["oracle_depth_slack"]
                )

            return CommandResponse(command, payload, result)

        space = as_space(beta)
        complement = complement_local(q, space, place)
        payload.update({
            "beta": str(space),
            "represented": complement is not None,
            "complement": _strings(complement) if complement is not None else None,
        })

        return CommandResponse(command, payload, complement is not None)

    def _spinor_norm(self, command, args):
        element = OrthogonalElement(args["q"], args["matrix"])
        word = cartan_dieudonne(element)
        payload = {
            "det": element.det,
            "spinor_norm": str(spinor_norm(element)),
            "length": len(word),
            "reflections": [_strings(v) for v in word.vectors],
        }

        return CommandResponse(command, payload)

    def _character_eval(self, command, args):
        element = OrthogonalElement(args["q"], args["matrix"])
        value = xi_eval(args["character"], element, args["place"])

        return CommandResponse(command, {"place": str(args["place"]), "value": value})

    def _admissible(self, command, args):
        alpha = args["quadruple"]

        if args["global"]:
            report = globally_admissible(alpha)
            payload = report.to_dict()
            positive = report.admissible
        else:
            report = locally_admissible(alpha, args["place"])
            payload = report.to_dict()
            positive = report.verdict

        payload["quadruple"] = alpha.to_dict()

        return CommandResponse(command, payload, positive)

    def _weil_check(self, command, args):
        checks = weil_check(
            args["p"],
            args["diag"],
            args["n"],
            seed=options["seed"],
            samples=options["weil_samples"],
            tolerance=options["weil_tolerance"],
            max_states=options["weil_max_states"],
            cap=options["weil_group_cap"],
        )
        payload = {
            "model": {"p": args["p"], "diag": args["diag"], "n": args["n"]},
            "checks": checks,
        }

        return CommandResponse(command, payload, all(checks.values()))

    def _unramified_factor(self, command, args):
        datum = UnramifiedDatum(args["p"], args["m"], args["m_prime"], args["d"], args["d_prime"])
        factor = unramified_pairing(datum, truncation=args["truncation"])
        payload = {
            "p": datum.p,
            "factor": str(factor),
            "truncation": args["truncation"],
            "shell_sum": str(shell_sums(datum, args["truncation"]).as_expr()),
            "whittaker": {
                str(k): {
                    "W": unramified_W(datum, k).to_dict(),
                    "W_prime": unramified_W_prime(datum, k).to_dict(),
                }
                for k in (-1, 0, 1, 2)
            },
        }

        if args["s"] is not None:
            payload["s"] = str(args["s"])
            payload["value"] = str(factor.evaluate(Rational(datum.p) ** -args["s"]))

        return CommandResponse(command, payload)

    def _euler(self, command, args):
        estimate = partial_euler(args["exclude"], args["bound"], args["s"])
        payload = estimate.to_dict()
        positive = True

        if args["residue"]:
            check = residue_check(
                args["exclude"],
                offset=options["residue_offset"],
                tolerance=options["residue_tolerance"],
                terms=options["eta_terms"],
            )
            payload["residue"] = check.to_dict()
            positive = check.passed

        return CommandResponse(command, payload, positive)

    def _verdict(self, command, args):
        report = verdict(
            args["quadruple"],
            offset=options["residue_offset"],
            tolerance=options["residue_tolerance"],
            terms=options["eta_terms"],
        )

        return CommandResponse(command, report.to_dict(), report.verdict == VERDICT_ISOMORPHIC)

    def _selftest(self, command, args):
        results = run_selftest(args["fast"], options["seed"])

        for name, passed in results.items():
            interface.suite(name, passed)

        failed = [name for name, passed in results.items() if not passed]

        return CommandResponse(command, {"suites": results, "failed": failed}, not failed)
