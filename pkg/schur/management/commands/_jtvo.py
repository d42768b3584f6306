"""Shared plumbing for the computation commands: flags, --config merging, output and exit codes."""
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from schur.exceptions import IdentityViolation, JtvoError


class JtvoCommand(BaseCommand):
    query_serializer = None
    command_name = None

    def add_arguments(self, parser):
        self._config_keys = set()
        parser.add_argument('--config', help='JSON file whose keys mirror the long flag names')
        self.add_flag(parser, '--json', action='store_true', default=None, help='Print the JSON document')
        self.add_flag(parser, '--family', help='classical | lie | shifted | linrec | tridiagonal')
        self.add_flag(parser, '--coeffs', help='Recurrence coefficients a_0,...,a_l (p/q allowed)')
        self.add_flag(parser, '--slopes', help='k-slopes of the tridiagonal coefficients')
        self.add_query_arguments(parser)

    def add_flag(self, parser, *args, **kwargs):
        action = parser.add_argument(*args, **kwargs)
        self._config_keys.add(action.dest)
        return action

    def add_query_arguments(self, parser):
        pass

    def load_config(self, path):
        try:
            with open(path, 'rb') as stream:
                config = JSONParser().parse(stream)
        except OSError as exc:
            raise CommandError(f"cannot read config {path}: {exc}", returncode=2)
        except ParseError as exc:
            raise CommandError(f"config {path} is not valid JSON: {exc.detail}", returncode=2)
        if not isinstance(config, dict):
            raise CommandError(f"config {path} must hold a JSON object", returncode=2)
        unknown = sorted(set(config) - self._config_keys)
        if unknown:
            raise CommandError(f"unknown config keys: {', '.join(unknown)}", returncode=2)
        return config

    def collect(self, options):
        """Command line beats the config file, which beats the defaults."""
        params = self.load_config(options['config']) if options.get('config') else {}
        for key in self._config_keys:
            if options.get(key) is not None:
                params[key] = options[key]
        return {key: value for key, value in params.items() if value is not None}

    def format_errors(self, errors):
        parts = []
        for field, messages in errors.items():
            if isinstance(messages, dict):
                messages = [str(m) for m in messages.values()]
            parts.append(f"{field}: {' '.join(str(m) for m in messages)}")
        return "; ".join(parts)

    def handle(self, *args, **options):
        params = self.collect(options)
        as_json = bool(params.pop('json', False))
        serializer = self.query_serializer(data=params)
        if not serializer.is_valid():
            raise CommandError(self.format_errors(serializer.errors), returncode=2)
        try:
            result = serializer.save()
        except IdentityViolation as exc:
            self.stderr.write(self.style.ERROR(f"identity violation: {exc}"))
            raise CommandError(str(exc), returncode=1)
        except JtvoError as exc:
            raise CommandError(str(exc), returncode=2)

        if as_json:
            self.stdout.write(JSONRenderer().render(result.document).decode())
        else:
            self.stdout.write(result.text)
        if not result.ok:
            raise CommandError(f"{self.command_name}: identity does not hold", returncode=1)
