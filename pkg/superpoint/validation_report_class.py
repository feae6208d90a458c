import pandas as pd

from superpoint import constants as const


def get_df():
    """Empty report frame with the report columns."""
    return pd.DataFrame(columns=const.REPORT_COLUMNS)


class ValidationReport(object):
    """
    This is the validation report class. It collects every invariant a module
    violates (never only the first one), renders the violations as messages
    and decides whether the tool may go on with the module.
    """

    def __init__(self):
        """
        report_df: one row per violation (generator, invariant, state)
        result: violations grouped by generator
        action: decided action
        """
        self.report_df = get_df()
        self.result = {}
        self.action = {}

    def append_violation(self, generator, invariant, state):
        """
        Record a violation.
        :param generator: generator name, or a pair of names for commutators
        :param invariant: the relation that fails, e.g. 's1^3 = 0'
        :param state: one of the violation states of constants
        """
        row = pd.DataFrame({const.COLUMN_GENERATOR: [generator],
                            const.COLUMN_INVARIANT: [invariant],
                            const.COLUMN_STATE: [state]})
        self.append_df_to_global_df(row)

    def append_df_to_global_df(self, df):
        if self.report_df.empty:
            self.report_df = df.reset_index(drop=True)
        else:
            self.report_df = pd.concat([self.report_df, df], ignore_index=True)

    def generate_report(self):
        """
        Group the report by generator.
        For ex:
        if report_df:
            generator   invariant          state
              s1        s1^3 = 0           nilpotency relation fails
              s1        parity of s1       mixes parities
        result = {'s1': [['s1^3 = 0', 'nilpotency relation fails'],
                         ['parity of s1', 'mixes parities']]}
        """
        self.result = {}
        for _, row in self.report_df.iterrows():
            self.result.setdefault(row[const.COLUMN_GENERATOR], []).append(
                [row[const.COLUMN_INVARIANT], row[const.COLUMN_STATE]])
        return self.result

    def decide_action(self):
        if self.report_df.empty:
            self.action[const.VALIDATION_ACTION] = const.VALIDATION_ACTION_OK
        else:
            self.action[const.VALIDATION_ACTION] = const.VALIDATION_ACTION_STOP
        return self.action

    def check_action_is_stop_tool(self):
        return self.decide_action()[const.VALIDATION_ACTION] == const.VALIDATION_ACTION_STOP

    def generate_violation_list_of_strings(self):
        """
        The report as a list of messages, one per violation, in the order
        the checks ran.
        """
        return ['%s: %s (%s)' % (row[const.COLUMN_GENERATOR], row[const.COLUMN_INVARIANT], row[const.COLUMN_STATE])
                for _, row in self.report_df.iterrows()]
