"""Static validation of parsed programs.

Checks, in one walk: every name is defined before use, call arities and
assignment target counts match, macros never recurse, iterate counts stay
within the cap, and single-assignment holds.  Scoping rules:

- A macro body sees only its parameters and its own locals; the macro's
  outputs must all be bound when the body ends.
- An iterate body may rebind enclosing names (that is how chains advance);
  names first bound inside the body are local to one iteration and do not
  escape the block.
- Macro names share a namespace with built-ins and are visible inside
  their own bodies, so direct recursion is reported as recursion rather
  than as an unknown name.

resolve returns its argument unchanged on success.
"""

from __future__ import annotations

from ..constructions import ITERATION_CAP
from ..errors import ArityMismatch, DuplicateName, IterationCapError, MacroRecursion, UnknownName
from .nodes import (
    Assign,
    Call,
    Draw,
    FreePoint,
    Iterate,
    MacroDef,
    NameRef,
    Program,
    Statement,
    StyleSet,
)
from .registry import BUILTINS


class _Scope:
    """Chain of name sets; `barrier` marks a macro boundary lookups cannot cross."""

    def __init__(self, parent: "_Scope | None", barrier: bool = False) -> None:
        self.parent = parent
        self.barrier = barrier
        self.names: set[str] = set()

    def is_bound(self, name: str) -> bool:
        scope: _Scope | None = self
        while scope is not None:
            if name in scope.names:
                return True
            if scope.barrier:
                return False
            scope = scope.parent
        return False


def resolve(program: Program) -> Program:
    _Resolver(program).run()
    return program


class _Resolver:
    def __init__(self, program: Program) -> None:
        self.program = program
        self.macros: dict[str, MacroDef] = {}

    def run(self) -> None:
        top = _Scope(None)
        for statement in self.program:
            self.statement(statement, top, macro_stack=())

    # -- statements ------------------------------------------------------

    def statement(self, statement: Statement, scope: _Scope, macro_stack: tuple[str, ...]) -> None:
        if isinstance(statement, FreePoint):
            self.bind(statement.name, scope, statement)
        elif isinstance(statement, Assign):
            self.call(statement.call, scope, macro_stack, targets=len(statement.targets))
            for name in statement.targets:
                self.bind(name, scope, statement)
        elif isinstance(statement, MacroDef):
            self.macrodef(statement, scope)
        elif isinstance(statement, Iterate):
            if statement.count > ITERATION_CAP:
                raise IterationCapError(
                    statement.line,
                    statement.column,
                    f"iterate count {statement.count} exceeds the cap of {ITERATION_CAP}",
                )
            body_scope = _Scope(scope)
            for inner in statement.body:
                self.statement(inner, body_scope, macro_stack)
        elif isinstance(statement, Draw):
            if isinstance(statement.target, NameRef):
                self.reference(statement.target, scope)
            else:
                self.call(statement.target, scope, macro_stack, targets=None)
        elif isinstance(statement, StyleSet):
            pass
        else:  # pragma: no cover - parser emits no other kinds
            raise TypeError(f"unknown statement: {statement!r}")

    def macrodef(self, macro: MacroDef, scope: _Scope) -> None:
        if macro.name in BUILTINS:
            raise DuplicateName(
                macro.line, macro.column, f"macro {macro.name!r} shadows a built-in"
            )
        if macro.name in self.macros:
            raise DuplicateName(macro.line, macro.column, f"macro {macro.name!r} already defined")
        if scope.is_bound(macro.name):
            raise DuplicateName(
                macro.line, macro.column, f"{macro.name!r} is already bound to a value"
            )
        seen: set[str] = set()
        for param in macro.params:
            if param in seen:
                raise DuplicateName(
                    macro.line, macro.column, f"duplicate parameter {param!r}"
                )
            seen.add(param)
        seen_out: set[str] = set()
        for output in macro.outputs:
            if output in seen_out:
                raise DuplicateName(macro.line, macro.column, f"duplicate output {output!r}")
            seen_out.add(output)
        # visible inside its own body so self-calls resolve (and then fail as recursion)
        self.macros[macro.name] = macro
        body_scope = _Scope(None, barrier=True)
        body_scope.names.update(macro.params)
        for inner in macro.body:
            self.statement(inner, body_scope, macro_stack=(macro.name,))
        for output in macro.outputs:
            if output not in body_scope.names:
                raise UnknownName(
                    macro.line,
                    macro.column,
                    f"macro {macro.name!r} never binds its output {output!r}",
                )

    # -- names and calls --------------------------------------------------

    def bind(self, name: str, scope: _Scope, statement: Statement) -> None:
        if name in BUILTINS or name in self.macros:
            raise DuplicateName(
                statement.line, statement.column, f"{name!r} is a construction name"
            )
        if name in scope.names:
            raise DuplicateName(
                statement.line, statement.column, f"{name!r} is already bound in this scope"
            )
        if scope.is_bound(name):
            # visible from an enclosing scope; only iterate bodies (the only
            # non-root scopes) may rebind
            if scope.parent is not None:
                return
            raise DuplicateName(
                statement.line, statement.column, f"{name!r} is already bound in this scope"
            )
        scope.names.add(name)

    def reference(self, ref: NameRef, scope: _Scope) -> None:
        if not scope.is_bound(ref.name):
            raise UnknownName(ref.line, ref.column, f"unknown name {ref.name!r}")

    def call(
        self,
        call: Call,
        scope: _Scope,
        macro_stack: tuple[str, ...],
        targets: int | None,
    ) -> None:
        for arg in call.args:
            if isinstance(arg, NameRef):
                self.reference(arg, scope)
        if call.func in BUILTINS:
            spec = BUILTINS[call.func]
            if len(call.args) not in spec.arities:
                expected = " or ".join(str(a) for a in sorted(spec.arities))
                raise ArityMismatch(
                    call.line,
                    call.column,
                    f"{call.func} expects {expected} arguments, got {len(call.args)}",
                )
            if targets is not None and targets not in spec.target_counts:
                expected = " or ".join(str(c) for c in sorted(spec.target_counts))
                raise ArityMismatch(
                    call.line,
                    call.column,
                    f"{call.func} binds {expected} names, got {targets}",
                )
            return
        if call.func in self.macros:
            if call.func in macro_stack:
                raise MacroRecursion(
                    call.line, call.column, f"macro {call.func!r} calls itself"
                )
            macro = self.macros[call.func]
            if len(call.args) != len(macro.params):
                raise ArityMismatch(
                    call.line,
                    call.column,
                    f"{call.func} expects {len(macro.params)} arguments, got {len(call.args)}",
                )
            if targets is not None and targets != len(macro.outputs):
                raise ArityMismatch(
                    call.line,
                    call.column,
                    f"{call.func} binds {len(macro.outputs)} names, got {targets}",
                )
            return
        raise UnknownName(call.line, call.column, f"unknown construction {call.func!r}")
