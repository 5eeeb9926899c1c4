//! Shared plumbing for instance transformers: the uniform outcome type and
//! the mutable workspace that records trace events.

use crate::graph::{Graph, Instance, VertexId, VertexSet};
use crate::trace::{GraphDiff, Payload, ReductionTrace, RuleTag, TraceEvent};

/// A reduced instance together with the events that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub instance: Instance,
    pub trace: ReductionTrace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    /// The instance still has edges; the kernel is `instance`.
    Reduced(Reduction),
    /// The remaining graph is edgeless, so the budget suffices. The
    /// reduction is kept so a cover can be lifted.
    Yes(Reduction),
    /// A rule proved the instance has no cover within budget.
    No {
        rule: RuleTag,
        trace: ReductionTrace,
    },
}

impl KernelOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, KernelOutcome::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, KernelOutcome::No { .. })
    }

    pub fn reduction(&self) -> Option<&Reduction> {
        match self {
            KernelOutcome::Reduced(r) | KernelOutcome::Yes(r) => Some(r),
            KernelOutcome::No { .. } => None,
        }
    }

    pub fn into_reduction(self) -> Option<Reduction> {
        match self {
            KernelOutcome::Reduced(r) | KernelOutcome::Yes(r) => Some(r),
            KernelOutcome::No { .. } => None,
        }
    }

    pub fn instance(&self) -> Option<&Instance> {
        self.reduction().map(|r| &r.instance)
    }

    pub fn trace(&self) -> &ReductionTrace {
        match self {
            KernelOutcome::Reduced(r) | KernelOutcome::Yes(r) => &r.trace,
            KernelOutcome::No { trace, .. } => trace,
        }
    }

    /// Runs `next` on a `Reduced` kernel and prepends this outcome's trace.
    /// `Yes` and `No` are final and pass through.
    pub fn then(self, next: impl FnOnce(Instance) -> KernelOutcome) -> KernelOutcome {
        match self {
            KernelOutcome::Reduced(r) => {
                let mut trace = r.trace;
                match next(r.instance) {
                    KernelOutcome::Reduced(mut s) => {
                        trace.extend(s.trace);
                        s.trace = trace;
                        KernelOutcome::Reduced(s)
                    }
                    KernelOutcome::Yes(mut s) => {
                        trace.extend(s.trace);
                        s.trace = trace;
                        KernelOutcome::Yes(s)
                    }
                    KernelOutcome::No { rule, trace: t } => {
                        trace.extend(t);
                        KernelOutcome::No { rule, trace }
                    }
                }
            }
            done => done,
        }
    }

    /// Fallible variant of [`KernelOutcome::then`].
    pub fn try_then<E>(
        self,
        next: impl FnOnce(Instance) -> Result<KernelOutcome, E>,
    ) -> Result<KernelOutcome, E> {
        let mut err = None;
        let out = self.then(|inst| match next(inst.clone()) {
            Ok(o) => o,
            Err(e) => {
                err = Some(e);
                KernelOutcome::Reduced(Reduction {
                    instance: inst,
                    trace: ReductionTrace::new(),
                })
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// Marker for a rule that proved a No-instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Infeasible(pub RuleTag);

/// Mutable reduction state. All graph changes go through
/// [`Workspace::apply`] so they land in the trace.
#[derive(Clone, Debug)]
pub(crate) struct Workspace {
    pub graph: Graph,
    pub budget: usize,
    pub trace: ReductionTrace,
}

impl Workspace {
    pub fn new(inst: Instance) -> Self {
        Workspace {
            graph: inst.graph,
            budget: inst.budget,
            trace: ReductionTrace::new(),
        }
    }

    /// Applies one rule. `touched` must contain every deleted vertex and an
    /// endpoint of every edge the mutation adds or removes.
    pub fn apply(
        &mut self,
        touched: &VertexSet,
        budget_delta: usize,
        payload: Payload,
        mutate: impl FnOnce(&mut Graph),
    ) -> Result<(), Infeasible> {
        if budget_delta > self.budget {
            return Err(Infeasible(payload.tag()));
        }
        let before: Vec<(VertexId, VertexSet)> = touched
            .iter()
            .map(|v| (*v, self.graph.neighbors(*v).clone()))
            .collect();
        let before_edges = self.graph.edge_count();
        let first_new = self.graph.next_id();
        mutate(&mut self.graph);
        debug_assert!(self.graph.check_invariants().is_ok());
        let diff = GraphDiff::compute(&before, before_edges, first_new, &self.graph);
        self.budget -= budget_delta;
        self.trace.push(TraceEvent {
            payload,
            budget_delta,
            diff,
        });
        Ok(())
    }

    /// `No` when the budget is spent but edges remain.
    pub fn check_budget(&self) -> Result<(), Infeasible> {
        if self.budget == 0 && !self.graph.is_edgeless() {
            Err(Infeasible(RuleTag::Budget))
        } else {
            Ok(())
        }
    }

    pub fn finish(self) -> KernelOutcome {
        let reduction = Reduction {
            instance: Instance::new(self.graph, self.budget),
            trace: self.trace,
        };
        if reduction.instance.graph.is_edgeless() {
            KernelOutcome::Yes(reduction)
        } else {
            KernelOutcome::Reduced(reduction)
        }
    }

    pub fn fail(self, why: Infeasible) -> KernelOutcome {
        KernelOutcome::No {
            rule: why.0,
            trace: self.trace,
        }
    }

    pub fn conclude(self, result: Result<(), Infeasible>) -> KernelOutcome {
        match result {
            Ok(()) => self.finish(),
            Err(why) => self.fail(why),
        }
    }
}

/// Why a fallible reduction loop stopped early.
#[derive(Debug)]
pub(crate) enum Halt {
    No(Infeasible),
    Fault(crate::error::Error),
}

impl From<Infeasible> for Halt {
    fn from(i: Infeasible) -> Self {
        Halt::No(i)
    }
}

impl From<crate::error::Error> for Halt {
    fn from(e: crate::error::Error) -> Self {
        Halt::Fault(e)
    }
}

impl Workspace {
    pub fn conclude_halt(self, result: Result<(), Halt>) -> crate::error::Result<KernelOutcome> {
        match result {
            Ok(()) => Ok(self.finish()),
            Err(Halt::No(why)) => Ok(self.fail(why)),
            Err(Halt::Fault(e)) => Err(e),
        }
    }
}
