"""
Signals for Entclt tasks.
"""


#
# Entclt, exact computations for the discrete entropic CLT.
# Copyright (C) 2026  Entclt developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#


from typing import Any, Dict, Iterator, Tuple

import blinker


__all__ = (
    'Signal',
    'SignalBinder',
    'SignalSender',
    'SignalReceiver',
    'find_matches',
)


PREFIX = 'on_'


class Signal(blinker.Signal):
    """
    Blinker signal with named positional arguments.

    Tasks declare signals as class attributes, for example
    `on_row = Signal('row')`, and emit them as `self.on_row(row)`
    once `SignalSender` has bound them to the instance.
    """

    def __init__(self, *spec: str) -> None:
        """
        Constructor.

        Args:
            spec: Names of the signal arguments.
        """
        if 'sender' in spec:
            raise ValueError("Reserved argument name: 'sender'")

        self.spec = ('sender', *spec)
        super().__init__(doc=repr(self))

    def __call__(self, *args, **kwargs):
        raise ValueError(
            "Unbound signal, was SignalSender.__init__ skipped?"
        )

    def __repr__(self) -> str:
        return f"<signal ({', '.join(self.spec)})>"

    def send(self, *args, **kwargs):
        """
        Emits this signal on behalf of its sender.

        Args:
            sender: Object sending the signal.
            *args: Values to pass to the receivers, in spec order.

        Returns:
            A list of (receiver, return value) pairs.
        """
        if len(self.spec) < len(args):
            raise ValueError(
                f"Expected at most {len(self.spec)} arguments, "
                f"got {len(args)}."
            )

        data: Dict[str, Any] = dict(zip(self.spec, args))
        duplicates = sorted(data.keys() & kwargs.keys())

        if duplicates:
            raise ValueError(f"Got duplicate values for: {duplicates}")

        data.update(kwargs)
        sender = data.pop('sender', None)

        return super().send(sender, **data)


class SignalBinder:
    """
    Signal proxy bound to one sender.
    """

    def __init__(self, signal: Signal, sender: object) -> None:
        self.signal = signal
        self.sender = sender

    def __call__(self, *args, **kwargs):
        return self.signal.send(self.sender, *args, **kwargs)

    def __getattr__(self, attr):
        return getattr(self.signal, attr)

    def __repr__(self) -> str:
        return f"<bound {self.signal} of {self.sender}>"


class SignalSender:
    """
    Binds every declared signal to the instance on init.
    """

    def __init__(self) -> None:
        for key, source in find_sources(self):
            if not isinstance(source, SignalBinder):
                setattr(self, key, SignalBinder(source, self))


class SignalReceiver:
    """
    Connects same-named methods to a sender while in a with block.
    """

    def __init__(self, sender: SignalSender) -> None:
        """
        Constructor.

        Args:
            sender: Object to connect to.
        """
        self.sender = sender

    def __enter__(self):
        for _, source, target in find_matches(self.sender, self):
            source.connect(target, sender=self.sender)

        return self

    def __exit__(self, *args):
        for _, source, target in find_matches(self.sender, self):
            source.disconnect(target, sender=self.sender)


def find_related(obj: object) -> Iterator[Tuple[str, Any]]:
    """
    Yields all attributes named like signals.
    """
    for key in dir(obj):
        if key.startswith(PREFIX):
            yield key, getattr(obj, key)


def find_sources(sender: object) -> Iterator[Tuple[str, Any]]:
    """
    Yields the connectable signals of a sender.
    """
    for key, value in find_related(sender):
        connect = getattr(value, 'connect', None)
        disconnect = getattr(value, 'disconnect', None)

        if callable(connect) and callable(disconnect):
            yield key, value


def find_matches(
        sender: object,
        receiver: object,
        ) -> Iterator[Tuple[str, Any, Any]]:
    """
    Yields (name, signal, handler) for every matching pair.
    """
    sources = dict(find_sources(sender))
    targets = {
        key: value
        for key, value in find_related(receiver)
        if callable(value) and key not in vars(SignalReceiver)
    }

    for key in sorted(sources.keys() & targets.keys()):
        yield key, sources[key], targets[key]
