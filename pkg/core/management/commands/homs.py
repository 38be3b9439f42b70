from django.core.management.base import BaseCommand

from core.forms import HomsPredictForm
from core.mixins import EnvelopeCommandMixin, add_output_arguments
from core.services import default_bounds, homs_summary


class Command(EnvelopeCommandMixin, BaseCommand):
    help = "Predict homomorphisms between cell modules from single reflections"

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="action", required=True)
        predict = subparsers.add_parser("predict")
        predict.add_argument("partition")
        predict.add_argument("--delta", required=True)
        predict.add_argument("--p", required=True)
        predict.add_argument("--max-index", dest="max_index", help="Largest row index i < j")
        predict.add_argument("--r-min", dest="r_min")
        predict.add_argument("--r-max", dest="r_max")
        predict.add_argument("--max-size", dest="max_size", help="Largest partner size")
        add_output_arguments(predict)

    def handle(self, *args, **options):
        data = self.validated(HomsPredictForm, options)
        bounds = default_bounds(
            max_index=data["max_index"],
            r_min=data["r_min"],
            r_max=data["r_max"],
            max_size=data["max_size"],
        )
        payload = homs_summary(data["partition"], data["delta"], data["p"], bounds)
        payload["message"] = f"{len(payload['result']['predictions'])} predictions"
        self.emit(options, payload, command="homs predict")
