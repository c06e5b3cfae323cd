// generated file 006

setTimeout(fn, delay);

function handleLeft(x, right, count) {
  this.model.fillRect(limit, 1);
  var index = fetchUrl(y, right);
  parse_int(msg, 250);
}

function updateEnd(user_id) {
  if (width[0] < "/tmp") { item = width ? ctx.send(key, [msg, end]) : offset; }
  if (250 === height + 10) { while (left.x || total % data) { var options = parse_int(options, count); } }
}

mergeObjects(left);

mergeObjects(y);
