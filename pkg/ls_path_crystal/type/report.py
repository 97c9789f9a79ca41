import json
import typing


class Violation:
    def __init__(self, check: str, message: str, witness: typing.Any = None):
        self.check = check
        self.message = message
        self.witness = witness

    @property
    def get_dict(self):
        obj = {}
        obj["check"] = self.check
        obj["message"] = self.message
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj

    @property
    def get_json(self):
        return json.dumps(self.get_dict)


class VerificationReport:
    def __init__(self, kind: str, params: typing.Dict[str, typing.Any] = None):
        self.kind = kind
        self.params = params if params is not None else {}

        self.rows: typing.List[typing.Dict[str, typing.Any]] = []
        self.violations: typing.List[Violation] = []
        self.notes: typing.List[str] = []
        self.extra: typing.Dict[str, typing.Any] = {}

        self.partial = False

    def add_row(self, row: typing.Dict[str, typing.Any]):
        self.rows.append(row)

    def violate(self, check: str, message: str, witness: typing.Any = None):
        self.violations.append(Violation(check, message, witness))

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)

    @property
    def passed(self) -> bool:
        return len(self.violations) == 0 and not self.partial

    @property
    def get_dict(self):
        obj = {}

        obj["kind"] = self.kind
        obj["params"] = self.params
        obj["passed"] = self.passed
        if self.partial:
            obj["partial"] = True

        for k, v in self.extra.items():
            obj[k] = v

        obj["rows"] = self.rows
        obj["violations"] = [v.get_dict for v in self.violations]

        if len(self.notes) > 0:
            obj["notes"] = self.notes

        return obj

    @property
    def get_json(self):
        return json.dumps(self.get_dict)
