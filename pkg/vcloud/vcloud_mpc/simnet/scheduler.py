"""
Running party programs

A party program is a generator taking its PartyContext. It sends through the context and
yields Recv(src) to receive; the scheduler resumes it with the next Message from src.
When src has finished and nothing is queued, ChannelClosed is thrown into the program.
The generator's return value is the party's result.

run_deterministic interleaves all programs in one thread: a seeded shuffle fixes the
round-robin order and each party runs until it blocks. run_threaded gives each party
its own thread with blocking receives.
"""

import random
import threading
from collections.abc import Callable, Generator
from typing import Any

from vcloud.vcloud_mpc.simnet.network import Message, Network, PartyContext, PartyId, Recv
from vcloud.vcloud_mpc.utils.errors import ChannelClosed, LivelockError, SchedulingError, throw
from vcloud.vcloud_mpc.utils.logger import logger
from vcloud.vcloud_mpc.utils.settings import get_recv_timeout_seconds, get_step_bound

Program = Callable[[PartyContext], Generator[Recv, Message, Any]]

_START = object()


def _closed(src: PartyId, party: PartyId) -> ChannelClosed:
    return ChannelClosed(f"{src} finished without sending the message {party} waits for", peer=src)


def run_deterministic(
    network: Network, programs: dict[PartyId, Program], seed: int = 0, step_bound: int | None = None
) -> dict[PartyId, Any]:
    step_bound = step_bound if step_bound is not None else get_step_bound()
    order = list(programs)
    random.Random(seed).shuffle(order)
    active = {party: programs[party](network.context(party)) for party in order}
    waiting: dict[PartyId, Any] = dict.fromkeys(order, _START)
    results: dict[PartyId, Any] = {}
    steps = 0

    while active:
        progressed = False
        for party in order:
            gen = active.get(party)
            while gen is not None:
                want = waiting[party]
                throw_in = None
                value = None
                if want is not _START:
                    value = network.take(want.src, party)
                    if value is None:
                        if want.src in active:
                            break
                        throw_in = _closed(want.src, party)
                steps += 1
                if steps > step_bound:
                    throw(f"no completion after {step_bound} scheduler steps", LivelockError)
                try:
                    if throw_in is not None:
                        waiting[party] = gen.throw(throw_in)
                    else:
                        waiting[party] = gen.send(value)
                except StopIteration as stop:
                    results[party] = stop.value
                    del active[party]
                    network.mark_finished(party)
                    gen = None
                progressed = True
        if active and not progressed:
            stuck = ", ".join(f"{party} waits on {waiting[party].src}" for party in active)
            throw(f"deadlock: {stuck}", SchedulingError)
    logger("simnet").debug(f"deterministic run finished in {steps} steps, {len(network.trace)} messages")
    return results


def run_threaded(
    network: Network, programs: dict[PartyId, Program], timeout: float | None = None
) -> dict[PartyId, Any]:
    timeout = timeout if timeout is not None else get_recv_timeout_seconds()
    results: dict[PartyId, Any] = {}
    errors: list[BaseException] = []
    with network.cond:
        network.finished = {party for party in network.parties if party not in programs}

    def drive(party: PartyId, program: Program) -> None:
        gen = program(network.context(party))
        try:
            want = gen.send(None)
            while True:
                with network.cond:
                    ready = network.cond.wait_for(
                        lambda: network.channel(want.src, party).queue or want.src in network.finished or errors,
                        timeout,
                    )
                if errors:
                    gen.close()
                    return
                message = network.take(want.src, party)
                if message is not None:
                    want = gen.send(message)
                elif ready:
                    want = gen.throw(_closed(want.src, party))
                else:
                    throw(f"{party} timed out waiting on {want.src}", SchedulingError)
        except StopIteration as stop:
            results[party] = stop.value
        except Exception as e:
            with network.cond:
                errors.append(e)
                network.cond.notify_all()
        finally:
            network.mark_finished(party)

    threads = [
        threading.Thread(target=drive, args=(party, program), name=str(party), daemon=True)
        for party, program in programs.items()
    ]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    if errors:
        raise errors[0]
    return results
