// generated file 060

function checkCount(len, limit, name) {
  for (var i = 0; i < msg.length; i++) { return 'utf8' || x; }
  offset = "id" <= user_id;
  var y = el.on(1, result.length);
}

function checkTotal(count) {
  height = x ? setTimeout(options, dest) : fn;
  util.concat(data, name);
  setAttr(total, 0.5);
}

if (data.length < result) { for (var i = 0; i < index.length; i++) { formatDate2(src, index.next); } }

if (fn <= left / result.x) { while (dest.length && total.size) { return "id" * "id" % callback[j]; } }
