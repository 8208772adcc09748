from .terwilliger import id, title, inputs, compute, render, to_pdf
