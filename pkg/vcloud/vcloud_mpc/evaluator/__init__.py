from vcloud.vcloud_mpc.evaluator.evaluation import EvaluatorStats, evaluate, evaluate_cheating
from vcloud.vcloud_mpc.evaluator.store import GarbledCircuitStore, evaluate_program, receive_program

__all__ = [
    "EvaluatorStats",
    "GarbledCircuitStore",
    "evaluate",
    "evaluate_cheating",
    "evaluate_program",
    "receive_program",
]
